#include "schreier/polynomial.hpp"

#include <ostream>

#include "schreier/errors.hpp"

namespace schreier {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(Int coefficient, std::size_t degree) {
  std::vector<Int> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Int IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

IntPolynomial IntPolynomial::shifted(std::size_t shift) const {
  if (is_zero()) return {};
  std::vector<Int> c(shift + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + shift);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (i == 0 || !unit) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.str();
}

std::optional<IntPolynomial> poly_divides(const IntPolynomial& divisor,
                                          const IntPolynomial& dividend) {
  if (divisor.is_zero()) throw DivisionByZeroPolynomial();
  if (dividend.is_zero()) return IntPolynomial{};
  const auto dd = static_cast<std::size_t>(divisor.degree());
  if (dividend.degree() < divisor.degree()) return std::nullopt;

  // Top-down long division. The quotient over Q is unique, so a
  // non-integral step means no integer quotient exists.
  std::vector<Int> rem(dividend.coefficients().begin(),
                       dividend.coefficients().end());
  const auto div = divisor.coefficients();
  const Int& lead = div[dd];
  std::vector<Int> quot(rem.size() - dd);
  for (std::size_t top = rem.size(); top-- > dd;) {
    if (sgn(rem[top]) == 0) continue;
    if (!mpz_divisible_p(rem[top].get_mpz_t(), lead.get_mpz_t())) {
      return std::nullopt;
    }
    Int factor = rem[top] / lead;
    const std::size_t at = top - dd;
    for (std::size_t i = 0; i <= dd; ++i) rem[at + i] -= factor * div[i];
    quot[at] = std::move(factor);
  }
  for (const Int& r : rem) {
    if (sgn(r) != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

}  // namespace schreier
