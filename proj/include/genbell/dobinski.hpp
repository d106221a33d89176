#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace genbell {

struct SeriesOptions {
  double tolerance = 1e-12;
  std::size_t max_terms = 100000;
};

/// e^{-t} sum_x (1/x!) prod_{j=1..n} (x + (j-1)(r-s))_s t^x, truncated at the
/// first index x > n*s whose term falls below tolerance * partial sum.
/// Approximates B_{r,s}(n) at t = 1.
inline double gen_dobinski(unsigned r, unsigned s, unsigned n, double t,
                           SeriesOptions const& opts = {}) {
  if (s == 0 || r < s) {
    throw std::invalid_argument("generalized Dobinski series needs r >= s >= 1");
  }
  if (!(t > 0.0) || !(opts.tolerance > 0.0)) {
    throw std::invalid_argument("t and tolerance must be positive");
  }
  std::size_t const threshold = static_cast<std::size_t>(n) * s;
  long double weight = 1.0L;  // t^x / x!
  long double sum = 0.0L;
  for (std::size_t x = 0; x < opts.max_terms; ++x) {
    if (x > 0) {
      weight *= static_cast<long double>(t) / static_cast<long double>(x);
    }
    long double kernel = 1.0L;
    for (unsigned j = 1; j <= n && kernel != 0.0L; ++j) {
      long double const base = static_cast<long double>(x) + static_cast<long double>(j - 1) * (r - s);
      for (unsigned l = 0; l < s; ++l) {
        kernel *= base - l;
      }
    }
    long double const term = kernel * weight;
    sum += term;
    if (!std::isfinite(static_cast<double>(sum))) {
      throw std::overflow_error("Dobinski series overflowed double precision at n=" +
                                std::to_string(n));
    }
    if (x > threshold && term < static_cast<long double>(opts.tolerance) * sum) {
      return static_cast<double>(std::exp(-static_cast<long double>(t)) * sum);
    }
  }
  throw std::runtime_error("Dobinski series did not converge within max_terms");
}

inline double gen_dobinski(unsigned r, unsigned s, unsigned n, double t, double tolerance) {
  return gen_dobinski(r, s, n, t, SeriesOptions{tolerance});
}

/// Classical Dobinski formula for the Bell number B_n.
inline double dobinski_bell(unsigned n, double tolerance = 1e-12) {
  return gen_dobinski(1, 1, n, 1.0, SeriesOptions{tolerance});
}

}  // namespace genbell
