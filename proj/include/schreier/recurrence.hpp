#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "schreier/core.hpp"
#include "schreier/polynomial.hpp"

namespace schreier::recurrence {

/// a_n = a_{n-k} + a_{n-k-1}
struct PadovanRule {
  int k = 1;
};

/// a_n = sum_{i=1}^{r} coeffs[i-1] * a_{n-i}; coefficients may be negative.
struct SignedRule {
  std::vector<Int> coeffs;
};

struct RecurrenceSpec {
  std::vector<Nat> initial_terms;
  std::variant<PadovanRule, SignedRule> rule;

  std::size_t order() const;
};

/// First `count` terms. The rule is applied from position
/// initial_terms.size() onward. Throws NegativeTermDetected if a signed
/// rule produces a negative value, std::invalid_argument if there are fewer
/// initial terms than the order.
std::vector<Nat> generate(const RecurrenceSpec& spec, std::size_t count);

RecurrenceSpec padovan_like_spec(int k);
RecurrenceSpec max_padovan_like_spec(int k);
/// Order k+1 signed recurrence shared by s_{k,.} and s^(m)_{k,.}, with the
/// initial blocks 1, 2, ..., 2^{k-1}, 2^k-1 or 0, ..., 0, 1, k-1.
RecurrenceSpec schreier_corollary_spec(int k);
RecurrenceSpec max_schreier_corollary_spec(int k);

/// a_{k,0..count-1}
std::vector<Nat> gen_padovan_like(int k, std::size_t count);
/// a^(m)_{k,0..count-1}
std::vector<Nat> gen_max_padovan_like(int k, std::size_t count);
/// s_{k,1..count}
std::vector<Nat> gen_s_by_corollary(int k, std::size_t count);
/// s^(m)_{k,1..count}
std::vector<Nat> gen_sm_by_corollary(int k, std::size_t count);

/// s_{k,n} read off as a_{k,(n-1)k}.
Nat s_by_extraction(int k, std::int64_t n);
/// s^(m)_{k,n} read off as a^(m)_{k,(n-1)k}.
Nat sm_by_extraction(int k, std::int64_t n);

using SchreierBackend = std::function<Nat(int k, std::int64_t n)>;

/// s^(m)_{k,n} = 2 s_{k,n} - s_{k,n+1}. Throws NegativeTermDetected when
/// the backend's values make the difference negative.
Nat sm_from_s(int k, std::int64_t n, const SchreierBackend& s);
Nat sm_from_s(int k, std::int64_t n);

/// Terms of `id` at indices first, first+1, ..., first+count-1. Throws
/// std::invalid_argument if first lies below the family's first index.
std::vector<Nat> sequence_terms(const SequenceId& id, std::int64_t first,
                                std::size_t count);

/// True iff c_0 a_n + c_1 a_{n-1} + ... + c_r a_{n-r} = 0 for every
/// r <= n <= up_to, where r = deg p. The zero polynomial is always satisfied.
bool satisfies(std::span<const Int> sequence, const IntPolynomial& p,
               std::size_t up_to);
bool satisfies(std::span<const Nat> sequence, const IntPolynomial& p,
               std::size_t up_to);

}  // namespace schreier::recurrence
