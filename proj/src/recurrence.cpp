#include "schreier/recurrence.hpp"

#include <stdexcept>
#include <string>

#include "schreier/errors.hpp"

namespace schreier::recurrence {
namespace {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

void require_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

// Coefficients of s_{k,n} = sum_{i=1}^{k} (-1)^{i+1} C(k,i) s_{k,n-i} + s_{k,n-k-1}.
std::vector<Int> corollary_coeffs(int k) {
  std::vector<Int> c(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    Int b = binomial(k, i).value();
    c[i - 1] = (i % 2 == 1) ? b : Int(-b);
  }
  c[k] += 1;
  return c;
}

}  // namespace

std::size_t RecurrenceSpec::order() const {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, PadovanRule>) {
          return static_cast<std::size_t>(r.k) + 1;
        } else {
          return r.coeffs.size();
        }
      },
      rule);
}

std::vector<Nat> generate(const RecurrenceSpec& spec, std::size_t count) {
  const std::size_t order = spec.order();
  if (spec.initial_terms.size() < order) {
    throw std::invalid_argument("recurrence of order " + std::to_string(order) +
                                " needs at least that many initial terms");
  }
  std::vector<Nat> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count && n < spec.initial_terms.size(); ++n) {
    out.push_back(spec.initial_terms[n]);
  }
  if (const auto* pad = std::get_if<PadovanRule>(&spec.rule)) {
    const auto k = static_cast<std::size_t>(pad->k);
    while (out.size() < count) {
      const std::size_t n = out.size();
      out.push_back(out[n - k] + out[n - k - 1]);
    }
  } else {
    const auto& coeffs = std::get<SignedRule>(spec.rule).coeffs;
    Int acc;
    while (out.size() < count) {
      const std::size_t n = out.size();
      acc = 0;
      for (std::size_t i = 1; i <= coeffs.size(); ++i) {
        acc += coeffs[i - 1] * out[n - i].value();
      }
      auto term = Nat::try_from(acc);
      if (!term) {
        throw NegativeTermDetected("signed recurrence produced " +
                                   acc.get_str() + " at position " +
                                   std::to_string(n));
      }
      out.push_back(std::move(*term));
    }
  }
  return out;
}

RecurrenceSpec padovan_like_spec(int k) {
  require_k(k);
  // a_{k,0} = a_{k,1} = 1, a_{k,2} = ... = a_{k,k} = 2
  std::vector<Nat> init(static_cast<std::size_t>(k) + 1, Nat(2u));
  init[0] = Nat(1u);
  init[1] = Nat(1u);
  return {std::move(init), PadovanRule{k}};
}

RecurrenceSpec max_padovan_like_spec(int k) {
  require_k(k);
  if (k == 1) return {{Nat(1u), Nat(0u)}, PadovanRule{1}};
  // indices 0..k+1: 0, 0, 1, 0, ..., 0
  std::vector<Nat> init(static_cast<std::size_t>(k) + 2);
  init[2] = Nat(1u);
  return {std::move(init), PadovanRule{k}};
}

RecurrenceSpec schreier_corollary_spec(int k) {
  require_k(k);
  std::vector<Nat> init;
  Nat pow(1u);
  for (int i = 0; i < k; ++i) {
    init.push_back(pow);
    pow = pow + pow;
  }
  init.push_back(*pow.checked_sub(Nat(1u)));
  return {std::move(init), SignedRule{corollary_coeffs(k)}};
}

RecurrenceSpec max_schreier_corollary_spec(int k) {
  require_k(k);
  std::vector<Nat> init(static_cast<std::size_t>(k) - 1);
  init.emplace_back(1u);
  init.emplace_back(static_cast<unsigned>(k - 1));
  return {std::move(init), SignedRule{corollary_coeffs(k)}};
}

std::vector<Nat> gen_padovan_like(int k, std::size_t count) {
  return generate(padovan_like_spec(k), count);
}

std::vector<Nat> gen_max_padovan_like(int k, std::size_t count) {
  return generate(max_padovan_like_spec(k), count);
}

std::vector<Nat> gen_s_by_corollary(int k, std::size_t count) {
  return generate(schreier_corollary_spec(k), count);
}

std::vector<Nat> gen_sm_by_corollary(int k, std::size_t count) {
  return generate(max_schreier_corollary_spec(k), count);
}

Nat s_by_extraction(int k, std::int64_t n) {
  require_k(k);
  require_n(n);
  const auto index = static_cast<std::size_t>((n - 1) * k);
  return gen_padovan_like(k, index + 1).back();
}

Nat sm_by_extraction(int k, std::int64_t n) {
  require_k(k);
  require_n(n);
  const auto index = static_cast<std::size_t>((n - 1) * k);
  return gen_max_padovan_like(k, index + 1).back();
}

Nat sm_from_s(int k, std::int64_t n, const SchreierBackend& s) {
  require_k(k);
  require_n(n);
  const Nat here = s(k, n);
  const Nat next = s(k, n + 1);
  auto diff = (here + here).checked_sub(next);
  if (!diff) {
    throw NegativeTermDetected("2 s_{k,n} - s_{k,n+1} < 0 at k=" +
                               std::to_string(k) + ", n=" + std::to_string(n));
  }
  return std::move(*diff);
}

Nat sm_from_s(int k, std::int64_t n) {
  return sm_from_s(k, n, [](int kk, std::int64_t nn) {
    return s_by_extraction(kk, nn);
  });
}

std::vector<Nat> sequence_terms(const SequenceId& id, std::int64_t first,
                                std::size_t count) {
  const std::int64_t start = id.first_index();
  if (first < start) {
    throw std::invalid_argument(to_string(id) + " starts at index " +
                                std::to_string(start));
  }
  const auto skip = static_cast<std::size_t>(first - start);
  const std::size_t total = skip + count;
  std::vector<Nat> all;
  switch (id.family) {
    case Family::SchreierCount:
      all = gen_s_by_corollary(id.k, total);
      break;
    case Family::MaxSchreierCount:
      all = gen_sm_by_corollary(id.k, total);
      break;
    case Family::PadovanLike:
      all = gen_padovan_like(id.k, total);
      break;
    case Family::MaxPadovanLike:
      all = gen_max_padovan_like(id.k, total);
      break;
    case Family::Fibonacci:
      // F_{-1} = 1, F_0 = 0
      all = generate({{Nat(1u), Nat(0u)}, SignedRule{{Int(1), Int(1)}}}, total);
      break;
  }
  all.erase(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(skip));
  return all;
}

bool satisfies(std::span<const Int> sequence, const IntPolynomial& p,
               std::size_t up_to) {
  if (p.is_zero()) return true;
  const auto r = static_cast<std::size_t>(p.degree());
  if (sequence.size() <= r) {
    throw std::invalid_argument("sequence shorter than polynomial degree + 1");
  }
  if (up_to >= sequence.size()) {
    throw std::invalid_argument("up_to beyond the end of the sequence");
  }
  const auto c = p.coefficients();
  Int acc;
  for (std::size_t n = r; n <= up_to; ++n) {
    acc = 0;
    for (std::size_t i = 0; i <= r; ++i) acc += c[i] * sequence[n - i];
    if (sgn(acc) != 0) return false;
  }
  return true;
}

bool satisfies(std::span<const Nat> sequence, const IntPolynomial& p,
               std::size_t up_to) {
  std::vector<Int> values;
  values.reserve(sequence.size());
  for (const Nat& v : sequence) values.push_back(v.value());
  return satisfies(std::span<const Int>(values), p, up_to);
}

}  // namespace schreier::recurrence
