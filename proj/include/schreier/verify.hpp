#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

// Verification suites, one per counting result. Each suite recomputes both
// sides of an identity through independent code paths and records every
// disagreement.
namespace schreier::verify {

enum class Theorem {
  Thm1,       // s_{k,n} = a_{k,(n-1)k}
  Thm2,       // s^(m)_{k,n} = a^(m)_{k,(n-1)k}
  Thm3,       // s^(m)_{k,n} = 2 s_{k,n} - s_{k,n+1}
  Cor1,       // initial block and order-(k+1) recurrence of s
  Cor2,       // initial block and order-(k+1) recurrence of s^(m)
  Lemma21,    // binomial-sum closed form of a_{k,n}
  Lemma23,    // p_k divides q_k
  Eq24,       // binomial-sum closed form of a^(m)_{k,n}
  Hockey,     // hockey-stick identity
  Partition,  // |L_{k,n,i}| = |R_{k,n,i+1}| and level formulas
  Phi,        // F -> F + k is injective into S_{k,n+1}
  Satisfies,  // polynomial satisfaction and its closure rules
  Oracle,     // brute force equals every analytic backend
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);
std::span<const Theorem> all_theorems();

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct Failure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  // For the hockey-stick suite these hold the r and d ranges.
  Range k_range;
  Range n_range;
  std::uint64_t checks = 0;
  std::vector<Failure> failures;
  std::chrono::milliseconds wall_time{0};

  bool passed() const { return failures.empty() && checks > 0; }
};

struct Limits {
  std::optional<int> k_max;
  std::optional<int> n_max;
};

/// Default (k, n) ranges of a suite.
std::pair<Range, Range> default_ranges(Theorem t);

Report run(Theorem t, const Limits& limits = {});

inline constexpr int kReportSchemaVersion = 1;

/// Stable key order; wall time only when `timing` is set so output stays
/// deterministic by default.
nlohmann::ordered_json to_json(const Report& r, bool timing = false);

}  // namespace schreier::verify
