#include "schreier/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "schreier/closed_form.hpp"
#include "schreier/core.hpp"
#include "schreier/errors.hpp"
#include "schreier/oracle.hpp"
#include "schreier/polyengine.hpp"
#include "schreier/recurrence.hpp"

namespace schreier::verify {
namespace {

namespace cf = closed_form;
namespace rc = recurrence;
namespace pe = polyengine;

constexpr std::array kAll = {
    Theorem::Thm1,    Theorem::Thm2,      Theorem::Thm3,   Theorem::Cor1,
    Theorem::Cor2,    Theorem::Lemma21,   Theorem::Lemma23, Theorem::Eq24,
    Theorem::Hockey,  Theorem::Partition, Theorem::Phi,    Theorem::Satisfies,
    Theorem::Oracle,
};

template <typename T>
std::string show(const T& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

std::string show(bool v) { return v ? "true" : "false"; }

std::string kn(std::int64_t k, std::int64_t n) {
  return "k=" + std::to_string(k) + " n=" + std::to_string(n);
}

class Checker {
 public:
  explicit Checker(Report& r) : r_(r) {}

  template <typename T>
  void eq(std::string_view check, const std::string& inputs, const T& expected,
          const T& actual) {
    ++r_.checks;
    if (!(expected == actual)) {
      r_.failures.push_back(
          {std::string(check), inputs, show(expected), show(actual)});
    }
  }

  void truth(std::string_view check, const std::string& inputs, bool value) {
    eq(check, inputs, true, value);
  }

  // Runs f, turning a library exception into a recorded failure.
  template <typename F>
  void guarded(std::string_view check, const std::string& inputs, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++r_.checks;
      r_.failures.push_back({std::string(check), inputs, "no error", e.what()});
    }
  }

 private:
  Report& r_;
};

// Values a_{k,(n-1)k} for n = 1..n_max, read from one generated prefix.
std::vector<Nat> extracted(const std::vector<Nat>& seq, int k, int n_max) {
  std::vector<Nat> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(seq[static_cast<std::size_t>((n - 1) * k)]);
  }
  return out;
}

void thm1(Report& r, Checker& c) {
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const auto cor = rc::gen_s_by_corollary(kk, r.n_range.hi);
    for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
      c.guarded("thm1", kn(k, n), [&] {
        const Nat ext = rc::s_by_extraction(kk, n);
        c.eq("thm1.extraction_vs_corollary", kn(k, n), ext, cor[n - 1]);
        c.eq("thm1.extraction_vs_closed", kn(k, n), ext,
             cf::schreier_count_closed(kk, n));
      });
    }
  }
}

void thm2(Report& r, Checker& c) {
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const auto cor = rc::gen_sm_by_corollary(kk, r.n_range.hi);
    for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
      c.guarded("thm2", kn(k, n), [&] {
        const Nat ext = rc::sm_by_extraction(kk, n);
        c.eq("thm2.extraction_vs_corollary", kn(k, n), ext, cor[n - 1]);
        c.eq("thm2.extraction_vs_closed", kn(k, n), ext,
             cf::max_schreier_count_closed(kk, n));
        const std::int64_t index = (n - 1) * k;
        if (k == 1 || index >= 2) {
          c.eq("thm2.extraction_vs_padovan_closed", kn(k, n), ext,
               cf::max_padovan_like_closed(kk, index));
        }
      });
    }
  }
}

void thm3(Report& r, Checker& c) {
  constexpr std::int64_t kClosedLimit = 60;
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const int n_max = static_cast<int>(r.n_range.hi);
    const auto s_cor = rc::gen_s_by_corollary(kk, n_max + 1);
    const auto sm_cor = rc::gen_sm_by_corollary(kk, n_max);
    const auto a = rc::gen_padovan_like(kk, static_cast<std::size_t>(n_max * k + 1));
    const auto sm_ext = extracted(rc::gen_max_padovan_like(
                                      kk, static_cast<std::size_t>(n_max * k + 1)),
                                  kk, n_max);
    const rc::SchreierBackend by_corollary = [&](int, std::int64_t n) {
      return s_cor[n - 1];
    };
    const rc::SchreierBackend by_extraction = [&](int kx, std::int64_t n) {
      return a[static_cast<std::size_t>((n - 1) * kx)];
    };
    const rc::SchreierBackend by_closed = [](int kx, std::int64_t n) {
      return cf::schreier_count_closed(kx, n);
    };
    for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
      c.guarded("thm3", kn(k, n), [&] {
        c.eq("thm3.corollary", kn(k, n), sm_cor[n - 1],
             rc::sm_from_s(kk, n, by_corollary));
        c.eq("thm3.extraction", kn(k, n), sm_ext[n - 1],
             rc::sm_from_s(kk, n, by_extraction));
        if (n < kClosedLimit) {
          c.eq("thm3.closed", kn(k, n), cf::max_schreier_count_closed(kk, n),
               rc::sm_from_s(kk, n, by_closed));
        }
      });
    }
  }
}

void cor1(Report& r, Checker& c) {
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    c.guarded("cor1", kn(k, 0), [&] {
      const auto s = rc::gen_s_by_corollary(kk, std::max<std::int64_t>(r.n_range.hi, k + 1));
      // 1, 2, ..., 2^{k-1}, 2^k - 1
      for (int n = 1; n <= kk + 1; ++n) {
        Int want;
        mpz_ui_pow_ui(want.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
        if (n == kk + 1) want -= 1;
        c.eq("cor1.initial", kn(k, n), Nat(want), s[n - 1]);
      }
      for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
        c.eq("cor1.recurrence_vs_extraction", kn(k, n),
             rc::s_by_extraction(kk, n), s[n - 1]);
      }
    });
  }
}

void cor2(Report& r, Checker& c) {
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    c.guarded("cor2", kn(k, 0), [&] {
      const auto sm = rc::gen_sm_by_corollary(kk, std::max<std::int64_t>(r.n_range.hi, k + 1));
      // k-1 zeros, then 1, then k-1
      for (int n = 1; n <= kk + 1; ++n) {
        const unsigned want = n < kk ? 0u : (n == kk ? 1u : static_cast<unsigned>(kk - 1));
        c.eq("cor2.initial", kn(k, n), Nat(want), sm[n - 1]);
      }
      for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
        c.eq("cor2.recurrence_vs_extraction", kn(k, n),
             rc::sm_by_extraction(kk, n), sm[n - 1]);
      }
    });
  }
}

void lemma21(Report& r, Checker& c) {
  constexpr std::int64_t kSubstitutedLimit = 40;
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const auto a = rc::gen_padovan_like(kk, static_cast<std::size_t>(r.n_range.hi + 1));
    std::vector<Nat> closed;
    for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
      closed.push_back(cf::padovan_like_closed(kk, n));
      c.eq("lemma21.closed_vs_recurrence", kn(k, n), a[n], closed.back());
    }
    // The closed values obey a_n = a_{n-k} + a_{n-k-1} on their own.
    for (auto n = std::max<std::int64_t>(r.n_range.lo, k + 1) ; n <= r.n_range.hi; ++n) {
      const auto at = [&](std::int64_t i) { return closed[i - r.n_range.lo]; };
      if (n - k - 1 < r.n_range.lo) continue;
      c.eq("lemma21.closed_recurrence", kn(k, n), at(n), at(n - k) + at(n - k - 1));
    }
    // Lemma form at index (n-1)k, the substituted form, and the direct count.
    for (std::int64_t n = 1; n <= std::min(r.n_range.hi, kSubstitutedLimit); ++n) {
      const Nat sub = cf::extraction_sum_closed(kk, n);
      c.eq("lemma21.upper_limit_forms", kn(k, n),
           cf::padovan_like_closed(kk, (n - 1) * k), sub);
      if (n >= 2) {
        c.eq("lemma21.eq210_L_vs_R", kn(k, n), cf::schreier_count_closed(kk, n), sub);
      }
    }
  }
}

void eq24(Report& r, Checker& c) {
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const auto am = rc::gen_max_padovan_like(kk, static_cast<std::size_t>(r.n_range.hi + 1));
    for (auto n = std::max<std::int64_t>(r.n_range.lo, 2); n <= r.n_range.hi; ++n) {
      c.eq("eq24.closed_vs_recurrence", kn(k, n), am[n],
           cf::max_padovan_like_closed(kk, n));
    }
  }
}

void lemma23(Report& r, Checker& c) {
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const std::string in = "k=" + std::to_string(k);
    const IntPolynomial p = pe::build_p(kk);
    const IntPolynomial q = pe::build_q(kk);
    const IntPolynomial cof = pe::build_cofactor(kk);
    c.eq("lemma23.product", in, q, p * cof);
    const auto quotient = poly_divides(p, q);
    c.truth("lemma23.divides", in, quotient.has_value());
    if (quotient) c.eq("lemma23.quotient", in, cof, *quotient);
    c.truth("lemma23.verify_factorization", in, pe::verify_factorization(kk));

    bool spaced = true;
    const auto coeffs = q.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i % static_cast<std::size_t>(k) != 0 && sgn(coeffs[i]) != 0) spaced = false;
    }
    c.truth("lemma23.support_on_multiples", in, spaced);

    const auto compressed = pe::compress(q, static_cast<std::size_t>(k));
    c.truth("lemma23.compressible", in, compressed.has_value());
    if (compressed) {
      c.eq("lemma23.compressed_vs_corollary", in, pe::corollary_polynomial(kk),
           *compressed);
    }
    // The signed recurrence coefficients are the negated tail of the
    // corollary polynomial.
    const auto spec = rc::schreier_corollary_spec(kk);
    const auto& rule = std::get<rc::SignedRule>(spec.rule).coeffs;
    const IntPolynomial cp = pe::corollary_polynomial(kk);
    std::vector<Int> from_rule{Int(1)};
    for (const Int& x : rule) from_rule.push_back(-x);
    c.eq("lemma23.recurrence_coefficients", in, cp, IntPolynomial(from_rule));
  }
}

void hockey(Report& r, Checker& c) {
  for (auto rr = r.k_range.lo; rr <= r.k_range.hi; ++rr) {
    for (auto d = r.n_range.lo; d <= r.n_range.hi; ++d) {
      c.eq("hockey", "r=" + std::to_string(rr) + " d=" + std::to_string(d),
           binomial(rr + d + 1, rr + 1), cf::hockey_stick_sum(rr, d));
    }
  }
}

void partition(Report& r, Checker& c) {
  using oracle::Mode;
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
      const int nn = static_cast<int>(n);
      c.guarded("partition", kn(k, n), [&] {
        c.truth("partition.oracle_identity", kn(k, n),
                oracle::verify_partition_identity(kk, nn));
        Nat level_sum;
        Nat level_sum_closed;
        for (int i = 1; i <= nn + 2; ++i) {
          const std::string in = kn(k, n) + " i=" + std::to_string(i);
          const Nat strict = i <= nn ? oracle::count_by_cardinality(kk, nn, true, i) : Nat{};
          const Nat relaxed = oracle::count_by_cardinality(kk, nn, false, i);
          level_sum += strict;
          if (k >= 2) {
            const Nat strict_closed = cf::strict_level_count_closed(kk, nn, i);
            level_sum_closed += strict_closed;
            c.eq("partition.strict_closed_vs_oracle", in, strict, strict_closed);
            c.eq("partition.relaxed_closed_vs_oracle", in, relaxed,
                 cf::relaxed_level_count_closed(kk, nn, i));
            c.eq("partition.eq33_closed", in, strict_closed,
                 cf::relaxed_level_count_closed(kk, nn, i + 1));
          }
        }
        const Nat s = oracle::count({kk, nn, Mode::Schreier, true});
        const Nat sm = oracle::count({kk, nn, Mode::MaximalSchreier, true});
        c.eq("partition.level_sum_oracle", kn(k, n), *s.checked_sub(sm), level_sum);
        if (k >= 2) {
          c.eq("partition.level_sum_closed", kn(k, n),
               *cf::schreier_count_closed(kk, n).checked_sub(
                   cf::max_schreier_count_closed(kk, n)),
               level_sum_closed);
        }
      });
    }
  }
}

void phi(Report& r, Checker& c) {
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
      c.guarded("phi", kn(k, n), [&] {
        c.truth("phi.injective", kn(k, n),
                oracle::verify_phi_injection(static_cast<int>(k), static_cast<int>(n)));
      });
    }
  }
}

void satisfies_suite(Report& r, Checker& c) {
  constexpr std::size_t kClosureTerms = 300;
  constexpr std::size_t kSpacedTerms = 600;
  constexpr std::size_t kSubsequenceTerms = 200;
  constexpr std::size_t kMaxShift = 5;
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const std::string in = "k=" + std::to_string(k);
    const IntPolynomial p = pe::build_p(kk);
    const IntPolynomial q = pe::build_q(kk);
    const IntPolynomial cp = pe::corollary_polynomial(kk);

    const auto a = rc::gen_padovan_like(kk, kSpacedTerms);
    const auto am = rc::gen_max_padovan_like(kk, kSpacedTerms);
    const std::span<const Nat> a300(a.data(), kClosureTerms);

    c.truth("satisfies.a_p", in, rc::satisfies(a300, p, kClosureTerms - 1));
    c.truth("satisfies.am_p", in, rc::satisfies(am, p, kSpacedTerms - 1));
    for (std::size_t l = 0; l <= kMaxShift; ++l) {
      const std::string inl = in + " l=" + std::to_string(l);
      c.truth("satisfies.closure_shift", inl,
              rc::satisfies(a300, p.shifted(l), kClosureTerms - 1));
      c.truth("satisfies.closure_sum", inl,
              rc::satisfies(a300, p + p.shifted(l), kClosureTerms - 1));
    }
    c.truth("satisfies.a_q", in, rc::satisfies(a, q, kSpacedTerms - 1));
    c.truth("satisfies.am_q", in, rc::satisfies(am, q, kSpacedTerms - 1));

    const auto s = rc::gen_s_by_corollary(kk, kSubsequenceTerms);
    const auto sm = rc::gen_sm_by_corollary(kk, kSubsequenceTerms);
    c.truth("satisfies.s_corollary", in, rc::satisfies(s, cp, kSubsequenceTerms - 1));
    c.truth("satisfies.sm_corollary", in, rc::satisfies(sm, cp, kSubsequenceTerms - 1));
    // Same check on the subsequences taken from a and a^(m) directly.
    std::vector<Nat> a_sub;
    std::vector<Nat> am_sub;
    for (std::size_t i = 0; i < kSpacedTerms; i += static_cast<std::size_t>(k)) {
      a_sub.push_back(a[i]);
      am_sub.push_back(am[i]);
    }
    c.truth("satisfies.a_spaced_corollary", in,
            rc::satisfies(a_sub, cp, a_sub.size() - 1));
    c.truth("satisfies.am_spaced_corollary", in,
            rc::satisfies(am_sub, cp, am_sub.size() - 1));
  }
}

void oracle_suite(Report& r, Checker& c) {
  using oracle::Mode;
  constexpr int kWitnessLimit = 14;
  for (auto k = r.k_range.lo; k <= r.k_range.hi; ++k) {
    const int kk = static_cast<int>(k);
    const auto s_cor = rc::gen_s_by_corollary(kk, r.n_range.hi + 1);
    const auto sm_cor = rc::gen_sm_by_corollary(kk, r.n_range.hi);
    for (auto n = r.n_range.lo; n <= r.n_range.hi; ++n) {
      const int nn = static_cast<int>(n);
      c.guarded("oracle", kn(k, n), [&] {
        const Nat s = oracle::count({kk, nn, Mode::Schreier, true});
        const Nat sm = oracle::count({kk, nn, Mode::MaximalSchreier, true});
        c.eq("oracle.s_extraction", kn(k, n), s, rc::s_by_extraction(kk, n));
        c.eq("oracle.s_corollary", kn(k, n), s, s_cor[n - 1]);
        c.eq("oracle.s_closed", kn(k, n), s, cf::schreier_count_closed(kk, n));
        c.eq("oracle.sm_extraction", kn(k, n), sm, rc::sm_by_extraction(kk, n));
        c.eq("oracle.sm_corollary", kn(k, n), sm, sm_cor[n - 1]);
        c.eq("oracle.sm_closed", kn(k, n), sm, cf::max_schreier_count_closed(kk, n));

        const Nat s_next = oracle::count({kk, nn + 1, Mode::Schreier, true});
        c.eq("oracle.thm3", kn(k, n), sm,
             rc::sm_from_s(kk, n, [&](int, std::int64_t m) {
               return m == n ? s : s_next;
             }));
        if (k == 1) {
          c.eq("oracle.fibonacci_s", kn(k, n), s, cf::fibonacci(n));
          c.eq("oracle.fibonacci_sm", kn(k, n), sm, cf::fibonacci(n - 2));
        }
        if (nn <= kWitnessLimit) {
          const auto all = oracle::enumerate({kk, nn, Mode::Schreier, true});
          const auto maximal = oracle::enumerate({kk, nn, Mode::MaximalSchreier, true});
          const auto strict = oracle::enumerate({kk, nn, Mode::StrictSchreier, true});
          const std::set<SubsetWitness> all_set(all.begin(), all.end());
          bool subset = std::all_of(maximal.begin(), maximal.end(),
                                    [&](const auto& w) { return all_set.contains(w); });
          c.truth("oracle.maximal_subset_of_schreier", kn(k, n), subset);
          std::set<SubsetWitness> diff = all_set;
          for (const auto& w : maximal) diff.erase(w);
          c.truth("oracle.strict_is_difference", kn(k, n),
                  diff == std::set<SubsetWitness>(strict.begin(), strict.end()));
        }
      });
    }
  }
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Thm1: return "thm1";
    case Theorem::Thm2: return "thm2";
    case Theorem::Thm3: return "thm3";
    case Theorem::Cor1: return "cor1";
    case Theorem::Cor2: return "cor2";
    case Theorem::Lemma21: return "lemma21";
    case Theorem::Lemma23: return "lemma23";
    case Theorem::Eq24: return "eq24";
    case Theorem::Hockey: return "hockey";
    case Theorem::Partition: return "partition";
    case Theorem::Phi: return "phi";
    case Theorem::Satisfies: return "satisfies";
    case Theorem::Oracle: return "oracle";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : kAll) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

std::span<const Theorem> all_theorems() { return kAll; }

std::pair<Range, Range> default_ranges(Theorem t) {
  switch (t) {
    case Theorem::Thm1:
    case Theorem::Thm2:
      return {{1, 6}, {1, 60}};
    case Theorem::Thm3:
      return {{1, 6}, {1, 300}};
    case Theorem::Cor1:
    case Theorem::Cor2:
      return {{1, 10}, {1, 60}};
    case Theorem::Lemma21:
    case Theorem::Eq24:
      return {{2, 6}, {0, 400}};
    case Theorem::Lemma23:
      return {{1, 64}, {0, 0}};
    case Theorem::Hockey:
      return {{0, 60}, {0, 60}};
    case Theorem::Partition:
      return {{2, 4}, {1, 14}};
    case Theorem::Phi:
      return {{1, 4}, {1, 14}};
    case Theorem::Satisfies:
      return {{1, 8}, {0, 600}};
    case Theorem::Oracle:
      return {{1, 5}, {1, 20}};
  }
  return {};
}

Report run(Theorem t, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = std::string(theorem_name(t));
  std::tie(r.k_range, r.n_range) = default_ranges(t);
  if (limits.k_max) r.k_range.hi = *limits.k_max;
  if (limits.n_max) r.n_range.hi = *limits.n_max;
  if (t == Theorem::Partition || t == Theorem::Phi || t == Theorem::Oracle) {
    // The oracle enumerates n+1 elements.
    const int cap = oracle::kDefaultCap - 1;
    if (r.n_range.hi > cap) throw CapExceeded(static_cast<int>(r.n_range.hi) + 1, oracle::kDefaultCap);
  }
  if (r.k_range.hi < r.k_range.lo || r.n_range.hi < r.n_range.lo) {
    throw std::invalid_argument("empty parameter range for suite " + r.suite);
  }

  Checker c(r);
  switch (t) {
    case Theorem::Thm1: thm1(r, c); break;
    case Theorem::Thm2: thm2(r, c); break;
    case Theorem::Thm3: thm3(r, c); break;
    case Theorem::Cor1: cor1(r, c); break;
    case Theorem::Cor2: cor2(r, c); break;
    case Theorem::Lemma21: lemma21(r, c); break;
    case Theorem::Lemma23: lemma23(r, c); break;
    case Theorem::Eq24: eq24(r, c); break;
    case Theorem::Hockey: hockey(r, c); break;
    case Theorem::Partition: partition(r, c); break;
    case Theorem::Phi: phi(r, c); break;
    case Theorem::Satisfies: satisfies_suite(r, c); break;
    case Theorem::Oracle: oracle_suite(r, c); break;
  }
  r.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

nlohmann::ordered_json to_json(const Report& r, bool timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = r.suite;
  j["k_range"] = {r.k_range.lo, r.k_range.hi};
  j["n_range"] = {r.n_range.lo, r.n_range.hi};
  j["checks"] = r.checks;
  j["passed"] = r.passed();
  auto& fails = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json fj;
    fj["check"] = f.check;
    fj["inputs"] = f.inputs;
    fj["expected"] = f.expected;
    fj["actual"] = f.actual;
    fails.push_back(std::move(fj));
  }
  if (timing) j["wall_time_ms"] = r.wall_time.count();
  return j;
}

}  // namespace schreier::verify
