#include "schreier/polyengine.hpp"

#include <stdexcept>
#include <vector>

namespace schreier::polyengine {
namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

Int signed_binomial(int sign_exponent, std::int64_t a, std::int64_t b) {
  Int v = binomial(a, b).value();
  return sign_exponent % 2 == 0 ? v : Int(-v);
}

}  // namespace

IntPolynomial build_p(int k) {
  require_k(k);
  const auto kk = static_cast<std::size_t>(k);
  std::vector<Int> c(kk + 2);
  c[0] = 1;
  c[kk] = -1;
  c[kk + 1] = -1;
  return IntPolynomial(std::move(c));
}

IntPolynomial build_q(int k) {
  require_k(k);
  const auto kk = static_cast<std::size_t>(k);
  std::vector<Int> c(kk * (kk + 1) + 1);
  for (int i = 0; i <= k; ++i) c[kk * i] += signed_binomial(i, k, i);
  c[kk * (kk + 1)] -= 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial build_cofactor(int k) {
  require_k(k);
  const auto kk = static_cast<std::size_t>(k);
  std::vector<Int> c(kk * kk);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      c[kk * i + j] += signed_binomial(i - j, k - 1 - j, i - j);
    }
  }
  return IntPolynomial(std::move(c));
}

bool verify_factorization(int k) {
  const IntPolynomial p = build_p(k);
  const IntPolynomial q = build_q(k);
  const IntPolynomial cof = build_cofactor(k);
  if (p * cof != q) return false;
  const auto quotient = poly_divides(p, q);
  return quotient && *quotient == cof;
}

IntPolynomial corollary_polynomial(int k) {
  require_k(k);
  const auto kk = static_cast<std::size_t>(k);
  std::vector<Int> c(kk + 2);
  for (int i = 0; i <= k; ++i) c[i] += signed_binomial(i, k, i);
  c[kk + 1] -= 1;
  return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> compress(const IntPolynomial& p,
                                      std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("stride must be >= 1");
  const auto c = p.coefficients();
  std::vector<Int> out(c.empty() ? 0 : (c.size() - 1) / stride + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (i % stride != 0) return std::nullopt;
    out[i / stride] = c[i];
  }
  return IntPolynomial(std::move(out));
}

}  // namespace schreier::polyengine
