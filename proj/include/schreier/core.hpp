#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace schreier {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Arbitrary-precision nonnegative integer. Every count and sequence term is
/// a Nat; construction from a negative value is rejected.
class Nat {
 public:
  Nat() = default;

  template <std::unsigned_integral T>
  Nat(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT

  template <std::signed_integral T>
  explicit Nat(T v) : value_(static_cast<long>(v)) {
    check_nonnegative();
  }

  explicit Nat(Int v) : value_(std::move(v)) { check_nonnegative(); }

  /// Parses a decimal string; throws std::invalid_argument on bad input.
  static Nat parse(std::string_view text);

  /// std::nullopt when `v` is negative.
  static std::optional<Nat> try_from(const Int& v);

  const Int& value() const { return value_; }
  std::string str() const { return value_.get_str(); }

  /// Fits in an unsigned 64-bit word.
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  Nat& operator+=(const Nat& o) {
    value_ += o.value_;
    return *this;
  }
  Nat& operator*=(const Nat& o) {
    value_ *= o.value_;
    return *this;
  }
  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }

  /// this - o, or std::nullopt when o > this.
  std::optional<Nat> checked_sub(const Nat& o) const;

  friend bool operator==(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  void check_nonnegative() const;

  Int value_;
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

/// C(a, b) for 0 <= b <= a; zero for b < 0, b > a, or a < 0.
Nat binomial(std::int64_t a, std::int64_t b);

/// Floor of a / b, rounding toward negative infinity. Requires b >= 1.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Ceiling of a / b. Requires b >= 1.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

enum class Family {
  SchreierCount,     // s_{k,n}, n >= 1
  MaxSchreierCount,  // s^(m)_{k,n}, n >= 1
  PadovanLike,       // a_{k,n}, n >= 0
  MaxPadovanLike,    // a^(m)_{k,n}, n >= 0
  Fibonacci,         // F_n, n >= -1
};

/// Names one of the sequence families together with its parameter k.
struct SequenceId {
  Family family = Family::Fibonacci;
  int k = 0;  // 0 for Fibonacci, >= 1 otherwise

  static SequenceId schreier(int k);
  static SequenceId max_schreier(int k);
  static SequenceId padovan_like(int k);
  static SequenceId max_padovan_like(int k);
  static SequenceId fibonacci() { return {}; }

  /// Smallest index at which the family is defined.
  std::int64_t first_index() const;

  friend bool operator==(const SequenceId&, const SequenceId&) = default;
};

/// Short kind name used on the command line: s, sm, a, am, fib.
std::string_view kind_name(Family f);
std::optional<Family> parse_kind(std::string_view name);
std::string to_string(const SequenceId& id);

/// An explicit subset of {k, 2k, ..., nk}; elements strictly increasing,
/// each a multiple of k.
class SubsetWitness {
 public:
  SubsetWitness(int k, std::vector<std::int64_t> elements);

  int k() const { return k_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }

  /// "{2,4}"
  std::string str() const;

  friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
  friend auto operator<=>(const SubsetWitness&, const SubsetWitness&) = default;

 private:
  int k_;
  std::vector<std::int64_t> elements_;
};

std::ostream& operator<<(std::ostream& os, const SubsetWitness& w);

}  // namespace schreier
