#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "genbell/integer.hpp"

namespace genbell {

/// Dense polynomial with exact integer coefficients; coefficient i multiplies
/// x^i. The highest stored coefficient is non-zero unless the polynomial is 0,
/// in which case no coefficients are stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Integer> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }

  IntPolynomial(std::initializer_list<Integer> coefficients)
      : coeffs_(coefficients) {
    trim();
  }

  static IntPolynomial one() { return IntPolynomial{Integer(1)}; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Integer coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }

  std::vector<Integer> const& coefficients() const noexcept { return coeffs_; }

  Integer evaluate(Integer const& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  /// Multiplies in place by (x + c).
  IntPolynomial& multiply_linear(Integer const& c) {
    if (is_zero()) {
      return *this;
    }
    coeffs_.push_back(0);
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
      coeffs_[i] = coeffs_[i - 1] + c * coeffs_[i];
    }
    coeffs_[0] *= c;
    trim();
    return *this;
  }

  /// Divides by (x - root), returning the remainder P(root).
  Integer divide_linear(Integer const& root) {
    if (is_zero()) {
      return 0;
    }
    Integer carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      Integer next = coeffs_[i] + carry * root;
      coeffs_[i] = carry;
      carry = std::move(next);
    }
    // The old leading slot now holds zero.
    trim();
    return carry;
  }

  friend IntPolynomial operator*(IntPolynomial const& a, IntPolynomial const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(IntPolynomial const&, IntPolynomial const&) = default;

  friend std::ostream& operator<<(std::ostream& os, IntPolynomial const& p) {
    if (p.is_zero()) {
      return os << "0";
    }
    bool first = true;
    for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
      if (p.coeffs_[i] == 0) {
        continue;
      }
      if (!first) {
        os << " + ";
      }
      os << p.coeffs_[i];
      if (i > 0) {
        os << "*x^" << i;
      }
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  std::vector<Integer> coeffs_;
};

/// Shifted falling factorial as a polynomial: (x + c)_s.
inline IntPolynomial shifted_falling_factorial(Integer const& c, std::size_t s) {
  IntPolynomial out = IntPolynomial::one();
  for (std::size_t l = 0; l < s; ++l) {
    out.multiply_linear(c - l);
  }
  return out;
}

/// Coefficients a_q of p in the falling-factorial basis, p(x) = sum_q a_q (x)_q.
///
/// Repeated synthetic division: the remainder of p by (x - 0) is a_0, the
/// quotient divided by (x - 1) leaves a_1, and so on. Exact, O(d^2).
inline std::vector<Integer> to_falling_factorial_basis(IntPolynomial p) {
  std::vector<Integer> out;
  if (p.is_zero()) {
    return out;
  }
  auto const degree = static_cast<std::size_t>(p.degree());
  out.reserve(degree + 1);
  for (std::size_t q = 0; q <= degree; ++q) {
    out.push_back(p.divide_linear(Integer(q)));
  }
  return out;
}

/// Inverse of to_falling_factorial_basis.
inline IntPolynomial from_falling_factorial_basis(std::vector<Integer> const& a) {
  IntPolynomial out;
  IntPolynomial basis = IntPolynomial::one();
  for (std::size_t q = 0; q < a.size(); ++q) {
    std::vector<Integer> scaled = basis.coefficients();
    for (auto& c : scaled) {
      c *= a[q];
    }
    std::vector<Integer> sum(std::max(scaled.size(), out.coefficients().size()), 0);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] = out.coefficient(i) + (i < scaled.size() ? scaled[i] : Integer(0));
    }
    out = IntPolynomial(std::move(sum));
    basis.multiply_linear(-Integer(q));
  }
  return out;
}

}  // namespace genbell
