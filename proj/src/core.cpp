#include "schreier/core.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace schreier {

void Nat::check_nonnegative() const {
  if (sgn(value_) < 0) {
    throw std::domain_error("Nat cannot hold negative value " +
                            value_.get_str());
  }
}

Nat Nat::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal natural number: '" +
                                  std::string(text) + "'");
    }
  }
  return Nat(Int(std::string(text), 10));
}

std::optional<Nat> Nat::try_from(const Int& v) {
  if (sgn(v) < 0) return std::nullopt;
  return Nat(v);
}

bool Nat::fits_u64() const {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Nat exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::optional<Nat> Nat::checked_sub(const Nat& o) const {
  return try_from(Int(value_ - o.value_));
}

std::ostream& operator<<(std::ostream& os, const Nat& n) {
  return os << n.str();
}

Nat binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return Nat{};
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return Nat(std::move(out));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b < 1) throw std::invalid_argument("floor_div divisor must be >= 1");
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

namespace {

void require_k(int k) {
  if (k < 1) {
    throw std::invalid_argument("sequence parameter k must be >= 1, got " +
                                std::to_string(k));
  }
}

}  // namespace

SequenceId SequenceId::schreier(int k) {
  require_k(k);
  return {Family::SchreierCount, k};
}
SequenceId SequenceId::max_schreier(int k) {
  require_k(k);
  return {Family::MaxSchreierCount, k};
}
SequenceId SequenceId::padovan_like(int k) {
  require_k(k);
  return {Family::PadovanLike, k};
}
SequenceId SequenceId::max_padovan_like(int k) {
  require_k(k);
  return {Family::MaxPadovanLike, k};
}

std::int64_t SequenceId::first_index() const {
  switch (family) {
    case Family::SchreierCount:
    case Family::MaxSchreierCount:
      return 1;
    case Family::PadovanLike:
    case Family::MaxPadovanLike:
      return 0;
    case Family::Fibonacci:
      return -1;
  }
  return 0;
}

std::string_view kind_name(Family f) {
  switch (f) {
    case Family::SchreierCount:
      return "s";
    case Family::MaxSchreierCount:
      return "sm";
    case Family::PadovanLike:
      return "a";
    case Family::MaxPadovanLike:
      return "am";
    case Family::Fibonacci:
      return "fib";
  }
  return "?";
}

std::optional<Family> parse_kind(std::string_view name) {
  for (Family f : {Family::SchreierCount, Family::MaxSchreierCount,
                   Family::PadovanLike, Family::MaxPadovanLike,
                   Family::Fibonacci}) {
    if (kind_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string to_string(const SequenceId& id) {
  std::string out(kind_name(id.family));
  if (id.family != Family::Fibonacci) out += "_" + std::to_string(id.k);
  return out;
}

SubsetWitness::SubsetWitness(int k, std::vector<std::int64_t> elements)
    : k_(k), elements_(std::move(elements)) {
  if (k_ < 1) throw std::invalid_argument("witness k must be >= 1");
  if (elements_.empty()) throw std::invalid_argument("witness must be nonempty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] <= 0 || elements_[i] % k_ != 0) {
      throw std::invalid_argument("witness element " +
                                  std::to_string(elements_[i]) +
                                  " is not a positive multiple of k");
    }
    if (i > 0 && elements_[i] <= elements_[i - 1]) {
      throw std::invalid_argument("witness elements must strictly increase");
    }
  }
}

std::string SubsetWitness::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const SubsetWitness& w) {
  return os << w.str();
}

}  // namespace schreier
