#include "schreier/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "schreier/errors.hpp"

namespace schreier::oracle {
namespace {

using Mask = std::uint64_t;

void check_args(int k, int n, int cap) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (cap > kHardCap) cap = kHardCap;
  if (n > cap) throw CapExceeded(n, cap);
}

// Smallest element of the set encoded by a nonzero mask.
std::int64_t min_element(Mask m, int k) {
  return static_cast<std::int64_t>(std::countr_zero(m) + 1) * k;
}

bool accepts(Mask m, int k, Mode mode) {
  const std::int64_t lo = min_element(m, k);
  const std::int64_t size = std::popcount(m);
  switch (mode) {
    case Mode::Schreier:
      return lo >= size;
    case Mode::MaximalSchreier:
      return lo == size;
    case Mode::StrictSchreier:
      return lo > size;
  }
  return false;
}

// Calls f(mask) for every candidate mask of the query in ascending order.
template <typename F>
void scan(int n, bool require_max, F&& f) {
  const Mask end = Mask{1} << n;
  const Mask begin = require_max ? (Mask{1} << (n - 1)) : Mask{1};
  for (Mask m = begin; m < end; ++m) f(m);
}

SubsetWitness to_witness(Mask m, int k) {
  std::vector<std::int64_t> elems;
  elems.reserve(std::popcount(m));
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) elems.push_back(static_cast<std::int64_t>(i + 1) * k);
  }
  return SubsetWitness(k, std::move(elems));
}

std::set<SubsetWitness> as_set(const std::vector<SubsetWitness>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

std::vector<SubsetWitness> enumerate(const EnumerationQuery& q, int cap) {
  check_args(q.k, q.n, cap);
  std::vector<SubsetWitness> out;
  scan(q.n, q.require_max, [&](Mask m) {
    if (accepts(m, q.k, q.mode)) out.push_back(to_witness(m, q.k));
  });
  return out;
}

Nat count(const EnumerationQuery& q, int cap) {
  check_args(q.k, q.n, cap);
  std::uint64_t c = 0;
  scan(q.n, q.require_max, [&](Mask m) { c += accepts(m, q.k, q.mode); });
  return Nat(c);
}

Nat count_by_cardinality(int k, int n, bool strict, int i, int cap) {
  if (i < 1) throw std::invalid_argument("cardinality must be >= 1");
  const int universe = strict ? n : n + 1;
  check_args(k, universe, cap);
  std::uint64_t c = 0;
  scan(universe, true, [&](Mask m) {
    if (std::popcount(m) != i) return;
    const std::int64_t lo = min_element(m, k);
    if (strict) {
      c += lo > i;
    } else {
      c += lo >= i && i > lo - k;
    }
  });
  return Nat(c);
}

bool verify_phi_injection(int k, int n, int cap) {
  check_args(k, n + 1, cap);
  const auto source = enumerate({k, n, Mode::Schreier, true}, cap);
  const auto target = as_set(enumerate({k, n + 1, Mode::Schreier, true}, cap));
  std::set<SubsetWitness> images;
  for (const SubsetWitness& f : source) {
    std::vector<std::int64_t> shifted = f.elements();
    for (auto& e : shifted) e += k;
    SubsetWitness image(k, std::move(shifted));
    if (!target.contains(image)) return false;
    if (!images.insert(std::move(image)).second) return false;
  }
  return true;
}

bool verify_partition_identity(int k, int n, int cap) {
  check_args(k, n + 1, cap);
  for (int i = 1; i <= n; ++i) {
    if (count_by_cardinality(k, n, true, i, cap) !=
        count_by_cardinality(k, n, false, i + 1, cap)) {
      return false;
    }
  }

  // Left side: S_{k,n} minus its maximal sets, which is exactly L_{k,n}.
  const auto all = enumerate({k, n, Mode::Schreier, true}, cap);
  const auto maximal = as_set(enumerate({k, n, Mode::MaximalSchreier, true}, cap));
  std::set<SubsetWitness> left;
  for (const auto& f : all) {
    if (!maximal.contains(f)) left.insert(f);
  }
  if (left != as_set(enumerate({k, n, Mode::StrictSchreier, true}, cap))) {
    return false;
  }

  // Right side: S_{k,n+1} minus the image of phi.
  std::set<SubsetWitness> image;
  for (const auto& f : all) {
    std::vector<std::int64_t> shifted = f.elements();
    for (auto& e : shifted) e += k;
    image.emplace(k, std::move(shifted));
  }
  std::size_t right = 0;
  for (const auto& f : enumerate({k, n + 1, Mode::Schreier, true}, cap)) {
    right += !image.contains(f);
  }
  return left.size() == right;
}

}  // namespace schreier::oracle
