#pragma once

#include <cstddef>
#include <optional>

#include "schreier/polynomial.hpp"

// Characteristic polynomials of the Padovan-like recurrences and of their
// equally spaced subsequences.
namespace schreier::polyengine {

/// p_k(x) = 1 - x^k - x^{k+1}
IntPolynomial build_p(int k);

/// q_k(x) = sum_{i=0}^{k} (-1)^i C(k,i) x^{ki} - x^{k(k+1)}
IntPolynomial build_q(int k);

/// sum_{i=0}^{k-1} sum_{j=0}^{i} (-1)^{i-j} C(k-1-j, i-j) x^{ki+j},
/// the cofactor with q_k = p_k * cofactor.
IntPolynomial build_cofactor(int k);

/// p_k * cofactor == q_k, and long division of q_k by p_k returns the same
/// cofactor.
bool verify_factorization(int k);

/// sum_{i=0}^{k} (-1)^i C(k,i) x^i - x^{k+1}, built from its own formula.
IntPolynomial corollary_polynomial(int k);

/// Substitutes x^stride -> x. std::nullopt if some nonzero coefficient sits
/// at a degree that is not a multiple of stride.
std::optional<IntPolynomial> compress(const IntPolynomial& p,
                                      std::size_t stride);

}  // namespace schreier::polyengine
