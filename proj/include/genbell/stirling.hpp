#pragma once

// Generalized Stirling and Bell numbers S_{r,s}(n,k), B_{r,s}(n).
//
// Three independent exact routes are provided for the r = s case:
//   * stirling_mm          the clique-colouring recurrence,
//   * stirling_mm_blasiak  the normal-ordering recurrence in n+1,
//   * gen_stirling_row     coefficient extraction from the generalized Bell
//                          polynomial via the falling-factorial basis.
// The last one also covers r > s.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genbell/integer.hpp"
#include "genbell/polynomial.hpp"

namespace genbell {

namespace detail {

  // Row n (1-based) holds entries for k = 0..n*m.
  using StirlingRows = std::vector<std::vector<Natural>>;

  // Grows rows for one m on demand. Guarded by a mutex so that concurrent
  // callers observe identical values.
  template <typename NextRow>
  class RecurrenceMemo {
   public:
    explicit RecurrenceMemo(NextRow next) : next_(std::move(next)) {}

    Natural get(unsigned m, unsigned n, unsigned k) {
      std::lock_guard<std::mutex> lock(mutex_);
      StirlingRows& rows = table_[m];
      if (rows.empty()) {
        std::vector<Natural> first(m + 1, 0);
        first[m] = 1;
        rows.push_back(std::move(first));
      }
      while (rows.size() < n) {
        rows.push_back(next_(m, rows.back(), static_cast<unsigned>(rows.size()) + 1));
      }
      auto const& row = rows[n - 1];
      return k < row.size() ? row[k] : Natural(0);
    }

   private:
    NextRow next_;
    std::mutex mutex_;
    std::map<unsigned, StirlingRows> table_;
  };

  // C_m(n,k) = sum_i C(m,i) (k-i)_{m-i} C_m(n-1,k-i)
  inline std::vector<Natural> clique_next_row(unsigned m, std::vector<Natural> const& prev,
                                              unsigned n) {
    std::vector<Natural> row(static_cast<std::size_t>(n) * m + 1, 0);
    for (unsigned k = m; k < row.size(); ++k) {
      Natural acc = 0;
      for (unsigned i = 0; i <= m && i <= k; ++i) {
        unsigned const j = k - i;
        if (j >= prev.size() || prev[j] == 0) {
          continue;
        }
        acc += binomial(m, i) * falling_factorial(static_cast<std::int64_t>(j), m - i) * prev[j];
      }
      row[k] = std::move(acc);
    }
    return row;
  }

  // S(n,k) = sum_p C(k+p-m, p) (m)_p S(n-1, k+p-m)
  inline std::vector<Natural> blasiak_next_row(unsigned m, std::vector<Natural> const& prev,
                                               unsigned n) {
    std::vector<Natural> row(static_cast<std::size_t>(n) * m + 1, 0);
    for (unsigned k = m; k < row.size(); ++k) {
      Natural acc = 0;
      for (unsigned p = 0; p <= m; ++p) {
        std::int64_t const j = static_cast<std::int64_t>(k) + p - m;
        if (j < 0 || static_cast<std::size_t>(j) >= prev.size() || prev[j] == 0) {
          continue;
        }
        acc += binomial_signed(j, p) * falling_factorial(static_cast<std::int64_t>(m), p) * prev[j];
      }
      row[k] = std::move(acc);
    }
    return row;
  }

  using RowFn = std::vector<Natural> (*)(unsigned, std::vector<Natural> const&, unsigned);

  inline RecurrenceMemo<RowFn>& clique_memo() {
    static RecurrenceMemo<RowFn> memo(&clique_next_row);
    return memo;
  }

  inline RecurrenceMemo<RowFn>& blasiak_memo() {
    static RecurrenceMemo<RowFn> memo(&blasiak_next_row);
    return memo;
  }

  inline void require_positive_m(unsigned m) {
    if (m == 0) {
      throw std::invalid_argument("clique size m must be positive");
    }
  }

}  // namespace detail

/// Number of k-colourings of n disjoint copies of K_m, equal to S_{m,m}(n,k).
/// Zero outside m <= k <= n*m (and for n = 0).
inline Natural stirling_mm(unsigned m, unsigned n, unsigned k) {
  detail::require_positive_m(m);
  if (n == 0 || k < m || k > static_cast<std::uint64_t>(n) * m) {
    return 0;
  }
  return detail::clique_memo().get(m, n, k);
}

/// S_{m,m}(n,k) by the second recurrence, anchored at S_{m,m}(1,m) = 1.
inline Natural stirling_mm_blasiak(unsigned m, unsigned n, unsigned k) {
  detail::require_positive_m(m);
  if (n == 0 || k < m || k > static_cast<std::uint64_t>(n) * m) {
    return 0;
  }
  return detail::blasiak_memo().get(m, n, k);
}

/// B_{m,m}(n): all colourings of n K_m.
inline Natural bell_mm(unsigned m, unsigned n) {
  detail::require_positive_m(m);
  Natural total = 0;
  for (unsigned k = m; k <= n * m; ++k) {
    total += stirling_mm(m, n, k);
  }
  return total;
}

/// Positive Lah number n!/k! * C(n-1, k-1); zero unless 1 <= k <= n.
inline Natural lah(unsigned n, unsigned k) {
  if (k == 0 || n == 0 || k > n) {
    return 0;
  }
  return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

/// prod_{j=1..n} (x + (j-1)(r-s))_s
inline IntPolynomial generalized_bell_kernel(unsigned r, unsigned s, unsigned n) {
  if (s == 0 || r < s) {
    throw std::invalid_argument("generalized Bell polynomial needs r >= s >= 1, got r=" +
                                std::to_string(r) + " s=" + std::to_string(s));
  }
  IntPolynomial p = IntPolynomial::one();
  for (unsigned j = 1; j <= n; ++j) {
    Integer const shift = Integer(j - 1) * (r - s);
    p = p * shifted_falling_factorial(shift, s);
  }
  return p;
}

/// Row {k -> S_{r,s}(n,k)} for k = s..n*s, by extracting the falling-factorial
/// coefficients of the kernel polynomial. Since e^{-t} sum_x (x)_q t^x / x! = t^q,
/// the q-th coefficient is exactly S_{r,s}(n,q).
inline std::map<unsigned, Natural> gen_stirling_row(unsigned r, unsigned s, unsigned n) {
  auto const coeffs = to_falling_factorial_basis(generalized_bell_kernel(r, s, n));
  std::map<unsigned, Natural> row;
  if (n == 0) {
    return row;
  }
  for (unsigned q = s; q <= n * s; ++q) {
    Integer value = q < coeffs.size() ? coeffs[q] : Integer(0);
    if (value < 0) {
      throw std::logic_error("negative falling-factorial coefficient at r=" + std::to_string(r) +
                             " s=" + std::to_string(s) + " n=" + std::to_string(n) +
                             " k=" + std::to_string(q));
    }
    row.emplace(q, std::move(value));
  }
  // (x)_q for q < s cannot appear: every kernel factor vanishes at x = 0..s-1.
  for (unsigned q = 0; q < s && q < coeffs.size(); ++q) {
    if (coeffs[q] != 0) {
      throw std::logic_error("kernel polynomial has a low-order falling-factorial term");
    }
  }
  return row;
}

/// Number of k-colourings of a disjoint union of cliques with the given sizes.
/// Cliques are absorbed one at a time with the same kernel as stirling_mm.
inline Natural count_colourings_mixed(std::span<unsigned const> sizes, unsigned k) {
  if (sizes.empty()) {
    throw std::invalid_argument("clique family must be non-empty");
  }
  std::uint64_t total = 0;
  for (unsigned m : sizes) {
    if (m == 0) {
      throw std::invalid_argument("clique sizes must be positive");
    }
    total += m;
  }
  if (k > total) {
    return 0;
  }
  // counts[c]: colourings of the cliques absorbed so far using exactly c blocks.
  std::vector<Natural> counts(total + 1, 0);
  counts[0] = 1;
  std::uint64_t used = 0;
  for (unsigned m : sizes) {
    used += m;
    std::vector<Natural> next(total + 1, 0);
    for (std::uint64_t c = 0; c <= used; ++c) {
      Natural acc = 0;
      for (unsigned i = 0; i <= m && i <= c; ++i) {
        auto const j = c - i;
        if (counts[j] == 0) {
          continue;
        }
        acc += binomial(m, i) * falling_factorial(static_cast<std::int64_t>(j), m - i) * counts[j];
      }
      next[c] = std::move(acc);
    }
    counts = std::move(next);
  }
  return counts[k];
}

inline Natural count_colourings_mixed(std::vector<unsigned> const& sizes, unsigned k) {
  return count_colourings_mixed(std::span<unsigned const>(sizes), k);
}

/// Which number family a Triangle holds.
enum class Family { generalized_stirling, clique_colourings, lah };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::generalized_stirling:
      return "S";
    case Family::clique_colourings:
      return "C";
    case Family::lah:
      return "L";
  }
  return "?";
}

/// Sparse (n,k) -> value table. Absent cells read as zero.
struct Triangle {
  Family family = Family::generalized_stirling;
  std::vector<unsigned> parameters;
  std::map<std::pair<unsigned, unsigned>, Natural> entries;

  Natural at(unsigned n, unsigned k) const {
    auto it = entries.find({n, k});
    return it == entries.end() ? Natural(0) : it->second;
  }

  bool contains(unsigned n, unsigned k) const { return entries.count({n, k}) != 0; }

  /// Stored k values of row n, ascending.
  std::vector<unsigned> columns(unsigned n) const {
    std::vector<unsigned> out;
    for (auto it = entries.lower_bound({n, 0}); it != entries.end() && it->first.first == n; ++it) {
      out.push_back(it->first.second);
    }
    return out;
  }

  unsigned max_n() const { return entries.empty() ? 0 : entries.rbegin()->first.first; }
};

inline Triangle gen_stirling_triangle(unsigned r, unsigned s, unsigned n_max) {
  Triangle t{Family::generalized_stirling, {r, s}, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (auto& [k, v] : gen_stirling_row(r, s, n)) {
      t.entries.emplace(std::pair{n, k}, std::move(v));
    }
  }
  return t;
}

inline Triangle lah_triangle(unsigned n_max) {
  Triangle t{Family::lah, {}, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      t.entries.emplace(std::pair{n, k}, lah(n, k));
    }
  }
  return t;
}

inline Triangle clique_triangle(unsigned m, unsigned n_max) {
  Triangle t{Family::clique_colourings, {m}, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned k = m; k <= n * m; ++k) {
      t.entries.emplace(std::pair{n, k}, stirling_mm(m, n, k));
    }
  }
  return t;
}

}  // namespace genbell
