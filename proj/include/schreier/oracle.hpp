#pragma once

#include <vector>

#include "schreier/core.hpp"

// Brute-force enumeration of Schreier-type subsets of {k, 2k, ..., nk}.
//
// A subset is a bitmask over indices 1..n, bit i-1 standing for the element
// ik. Counts scan every mask and never use a formula, so they serve as the
// ground truth for the closed forms and recurrences.
namespace schreier::oracle {

inline constexpr int kDefaultCap = 24;
// Masks are 64-bit words.
inline constexpr int kHardCap = 62;

enum class Mode {
  Schreier,         // min F >= |F|
  MaximalSchreier,  // min F == |F|
  StrictSchreier,   // min F >  |F|
};

struct EnumerationQuery {
  int k = 1;
  int n = 1;
  Mode mode = Mode::Schreier;
  bool require_max = true;  // nk must belong to F
};

/// Witnesses in ascending bitmask order. Throws CapExceeded if n > cap.
std::vector<SubsetWitness> enumerate(const EnumerationQuery& q,
                                     int cap = kDefaultCap);

/// |enumerate(q)| without materialising witnesses.
Nat count(const EnumerationQuery& q, int cap = kDefaultCap);

/// strict: |L_{k,n,i}|, sets in {k..nk} with max nk and min > |F| = i.
/// relaxed: |R_{k,n,i}|, sets in {k..(n+1)k} with max (n+1)k and
///          min >= |F| = i > min - k.
Nat count_by_cardinality(int k, int n, bool strict, int i,
                         int cap = kDefaultCap);

/// F -> F + k sends every set counted by s_{k,n} to a distinct set counted
/// by s_{k,n+1}.
bool verify_phi_injection(int k, int n, int cap = kDefaultCap);

/// |L_{k,n,i}| == |R_{k,n,i+1}| for every 1 <= i <= n, and the set-level
/// identity |S_{k,n} \ S^(m)_{k,n}| == |S_{k,n+1} \ phi(S_{k,n})|.
bool verify_partition_identity(int k, int n, int cap = kDefaultCap);

}  // namespace schreier::oracle
