#pragma once

// Self-check suites run by `genbell verify`.

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "genbell/colouring.hpp"
#include "genbell/dobinski.hpp"
#include "genbell/eulerian.hpp"
#include "genbell/fixtures.hpp"
#include "genbell/integer.hpp"
#include "genbell/reference_tables.hpp"
#include "genbell/stirling.hpp"

namespace genbell {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::filesystem::path fixtures;
  std::size_t max_vertices = 8;  // bijection suite: families with sum of sizes <= this
  unsigned conjecture_n_max = 10;
};

namespace detail {

  class CheckLog {
   public:
    CheckLog(std::string suite, std::vector<CheckResult>& out)
        : suite_(std::move(suite)), out_(out) {}

    void record(std::string name, bool passed, std::string detail) {
      out_.push_back({suite_, std::move(name), passed, std::move(detail)});
    }

   private:
    std::string suite_;
    std::vector<CheckResult>& out_;
  };

  /// Every ordered list of positive sizes with sum <= limit.
  inline std::vector<std::vector<unsigned>> compositions_up_to(std::size_t limit) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    std::function<void(std::size_t)> grow = [&](std::size_t budget) {
      for (unsigned part = 1; part <= budget; ++part) {
        current.push_back(part);
        out.push_back(current);
        grow(budget - part);
        current.pop_back();
      }
    };
    grow(limit);
    return out;
  }

  inline std::string sizes_to_string(std::vector<unsigned> const& sizes) {
    std::string out = "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      out += (i ? "," : "") + std::to_string(sizes[i]);
    }
    return out + "]";
  }

}  // namespace detail

inline void verify_tables(std::vector<CheckResult>& out) {
  detail::CheckLog log("tables", out);

  {
    std::size_t bad = 0;
    std::ostringstream first;
    for (unsigned n = 1; n <= reference::s33_table.size(); ++n) {
      auto const row = gen_stirling_row(3, 3, n);
      for (unsigned c = 0; c < reference::s33_table[n - 1].size(); ++c) {
        unsigned const k = reference::s33_first_k + c;
        std::uint64_t const printed = reference::s33_table[n - 1][c];
        if (printed == 0) {
          continue;
        }
        auto const it = row.find(k);
        Natural const extracted = it == row.end() ? Natural(0) : it->second;
        if (stirling_mm(3, n, k) != printed || stirling_mm_blasiak(3, n, k) != printed ||
            extracted != printed) {
          if (bad++ == 0) {
            first << "S33(" << n << "," << k << ") != " << printed;
          }
        }
      }
    }
    log.record("S33 table", bad == 0, bad == 0 ? "all printed cells reproduced" : first.str());
  }

  {
    std::size_t bad = 0;
    for (unsigned n = 1; n <= reference::b33_prefix.size(); ++n) {
      bad += bell_mm(3, n) != reference::b33_prefix[n - 1];
    }
    log.record("B33 prefix", bad == 0, "1, 34, 2971, 513559");
  }

  {
    std::size_t bad = 0;
    std::ostringstream first;
    for (unsigned n = 1; n <= reference::s21_table.size(); ++n) {
      auto const row = gen_stirling_row(2, 1, n);
      for (unsigned k = 1; k <= n; ++k) {
        std::uint64_t const printed = reference::s21_table[n - 1][k - 1];
        if (lah(n, k) != printed || row.at(k) != printed) {
          if (bad++ == 0) {
            first << "S21(" << n << "," << k << ") != " << printed;
          }
        }
      }
    }
    log.record("S21 table (Lah)", bad == 0, bad == 0 ? "all printed cells reproduced" : first.str());
  }

  {
    std::size_t bad = 0;
    std::ostringstream first;
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned n = 1; n <= 5; ++n) {
        auto const row = gen_stirling_row(m, m, n);
        for (unsigned k = 1; k <= n * m; ++k) {
          Natural const a = stirling_mm(m, n, k);
          Natural const b = stirling_mm_blasiak(m, n, k);
          auto const it = row.find(k);
          Natural const c = it == row.end() ? Natural(0) : it->second;
          if (a != b || a != c) {
            if (bad++ == 0) {
              first << "routes disagree at m=" << m << " n=" << n << " k=" << k;
            }
          }
        }
      }
    }
    log.record("three routes agree (m<=3, n<=5)", bad == 0, first.str());
  }

  {
    std::size_t bad = 0;
    for (std::int64_t k = 0; k <= 30; ++k) {
      for (std::int64_t m = 0; m <= k; ++m) {
        for (std::int64_t i = 0; i <= m; ++i) {
          Integer const lhs = falling_factorial(m, static_cast<std::size_t>(i)) * binomial_signed(k + i - m, i);
          Integer const rhs = falling_factorial(k + i - m, static_cast<std::size_t>(i)) * binomial_signed(m, i);
          bad += lhs != rhs;
        }
      }
    }
    log.record("binomial identity (k<=30)", bad == 0,
               bad == 0 ? "" : std::to_string(bad) + " failing triples");
  }

  {
    double worst = 0.0;
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned n = 1; n <= 4; ++n) {
        double const exact = bell_mm(m, n).convert_to<double>();
        worst = std::max(worst, std::abs(gen_dobinski(m, m, n, 1.0, 1e-12) - exact) / exact);
      }
    }
    double worst_abs = 0.0;
    for (unsigned n = 1; n <= 8; ++n) {
      double const exact = bell_mm(1, n).convert_to<double>();
      worst_abs = std::max(worst_abs, std::abs(dobinski_bell(n, 1e-12) - exact));
    }
    std::ostringstream detail;
    detail << "max rel err " << worst << ", max abs err " << worst_abs;
    log.record("Dobinski series", worst <= 1e-6 && worst_abs <= 1e-6, detail.str());
  }
}

inline void verify_oeis(std::vector<CheckResult>& out, VerifyOptions const& opts) {
  detail::CheckLog log("oeis", out);
  FixtureSet const fixtures = load_fixtures(opts.fixtures);

  auto report = [&](std::string const& id, SequenceReport const& r) {
    std::ostringstream d;
    d << r.compared << " terms";
    if (r.first_mismatch) {
      d << ", first mismatch at " << *r.first_mismatch << ": expected " << r.expected << " got "
        << r.actual;
    }
    log.record(id, r.match && r.compared > 0, d.str());
  };
  auto require = [&](std::string const& id) -> SequenceFixture const* {
    auto it = fixtures.find(id);
    if (it == fixtures.end()) {
      log.record(id, false, "fixture missing");
      return nullptr;
    }
    return &it->second;
  };

  if (auto const* f = require("A069223")) {
    std::vector<Natural> computed;
    for (unsigned n = 1; n < 1 + f->values.size(); ++n) {
      computed.push_back(bell_mm(3, n));
    }
    report(f->id + " B33", check_sequence(*f, computed, 1));
  }
  if (auto const* f = require("A000110")) {
    std::vector<Natural> computed;
    for (unsigned n = 1; n < f->values.size() + static_cast<std::size_t>(f->offset); ++n) {
      computed.push_back(bell_mm(1, n));
    }
    report(f->id + " B11", check_sequence(*f, computed, 1));
  }
  if (auto const* f = require("A105278")) {
    std::vector<Natural> computed;
    for (unsigned n = 1; computed.size() < f->values.size(); ++n) {
      auto const row = gen_stirling_row(2, 1, n);
      for (unsigned k = 1; k <= n && computed.size() < f->values.size(); ++k) {
        computed.push_back(row.at(k));
      }
    }
    report(f->id + " S21 rows", check_sequence(*f, computed));
  }
  if (fixtures.count("A001147") && fixtures.count("A007559")) {
    for (auto const& h : verify_conjectures(fixtures, opts.conjecture_n_max)) {
      std::ostringstream d;
      d << "hypothesis S_{" << h.r << "," << h.s << "}(n,1) = " << h.fixture_id << "(n) for n=1.."
        << opts.conjecture_n_max << ": " << (h.holds() ? "observed" : "refuted or unchecked");
      log.record(h.fixture_id + " conjecture", h.holds(), d.str());
    }
  } else {
    log.record("conjectures", false, "A001147/A007559 fixtures missing");
  }
}

inline void verify_bijection(std::vector<CheckResult>& out, VerifyOptions const& opts) {
  detail::CheckLog log("bijection", out);
  std::size_t families = 0;
  std::size_t objects = 0;
  std::optional<std::string> failure;
  for (auto const& sizes : detail::compositions_up_to(opts.max_vertices)) {
    CliqueFamily const family(sizes);
    ++families;
    std::vector<std::size_t> per_k(family.vertex_count() + 1, 0);
    for_each_colouring(family, [&](Colouring const& c) {
      ++objects;
      ++per_k[c.block_count()];
      auto const d = colouring_to_digraph(family, c);
      if (failure) {
        return;
      }
      if (!validate(d) || d.vertex_count != c.block_count()) {
        failure = "invalid image of " + to_text(c);
      } else if (digraph_to_colouring(family, d) != c) {
        failure = "colouring roundtrip failed for " + to_text(c) + " in " + detail::sizes_to_string(sizes);
      } else if (canonicalize(colouring_to_digraph(family, digraph_to_colouring(family, d))) !=
                 canonicalize(d)) {
        failure = "digraph roundtrip failed for " + to_text(d);
      } else if (from_paths(to_paths(d), sizes) != d) {
        failure = "path roundtrip failed for " + to_text(d);
      }
    });
    for (std::size_t k = 1; k < per_k.size() && !failure; ++k) {
      if (count_colourings_mixed(sizes, static_cast<unsigned>(k)) != per_k[k]) {
        failure = "count mismatch for " + detail::sizes_to_string(sizes) + " at k=" + std::to_string(k);
      }
    }
  }
  std::ostringstream d;
  d << families << " families, " << objects << " colourings";
  if (failure) {
    d << "; " << *failure;
  }
  log.record("roundtrips (sum of sizes <= " + std::to_string(opts.max_vertices) + ")",
             !failure.has_value(), d.str());
}

}  // namespace genbell
