#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace genbell {

/// Arbitrary-precision signed integer. Used for polynomial coefficients.
using Integer = boost::multiprecision::cpp_int;

/// Count type. Same representation as Integer; every function that returns a
/// Natural guarantees a non-negative value.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(Integer const& x) { return x.str(); }

/// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
inline Integer falling_factorial(Integer const& x, std::size_t n) {
  Integer out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out *= x - i;
  }
  return out;
}

inline Integer falling_factorial(std::int64_t x, std::size_t n) {
  return falling_factorial(Integer(x), n);
}

/// C(n, k); zero when k > n.
inline Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  Natural out = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

/// C(n, k) for a possibly negative top argument; zero whenever n < 0.
/// Only non-negative tops occur in the recurrences, the guard keeps callers
/// from having to test for it.
inline Natural binomial_signed(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    return 0;
  }
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

inline Natural factorial(std::uint64_t n) {
  Natural out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    out *= i;
  }
  return out;
}

}  // namespace genbell
