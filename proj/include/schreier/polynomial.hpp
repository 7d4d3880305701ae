#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schreier/core.hpp"

namespace schreier {

/// Dense integer polynomial in one variable. Index i holds the coefficient of
/// x^i; trailing zeros are always trimmed so the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(Int coefficient, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  std::span<const Int> coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Int coefficient(std::size_t i) const;

  /// x^shift * p
  IntPolynomial shifted(std::size_t shift) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human readable form, e.g. "1 - x^2 - x^3".
  std::string str() const;

 private:
  void trim();

  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

inline IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) {
  return p + q;
}
inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
  return p * q;
}

/// Returns c with dividend == divisor * c when such an integer polynomial
/// exists, std::nullopt otherwise. Exact long division over the integers.
/// Throws DivisionByZeroPolynomial when divisor is zero.
std::optional<IntPolynomial> poly_divides(const IntPolynomial& divisor,
                                          const IntPolynomial& dividend);

}  // namespace schreier
