#pragma once

#include <cstdint>

#include "schreier/core.hpp"

// Binomial-sum formulas for every counting sequence. Each sum is evaluated
// term by term exactly as displayed; nothing is simplified. Requests with
// k = 1 are answered through Fibonacci numbers.
namespace schreier::closed_form {

/// F_n with F_{-1} = 1, F_0 = 0. Requires n >= -1.
Nat fibonacci(std::int64_t n);

/// a_{k,n} = sum_{i=0}^{floor((n-2)/(k+1))+1} C(floor((n-i-1)/k)+1, i).
Nat padovan_like_closed(int k, std::int64_t n);

/// a_{k,(n-1)k} written in the substituted form
///   sum_{i=0}^{floor((nk-1)/(k+1))} C(n - ceil((i+1)/k), i).
/// Equal to padovan_like_closed(k, (n-1)k); both are kept so they can be
/// compared. Requires k >= 2, n >= 1.
Nat extraction_sum_closed(int k, std::int64_t n);

/// a^(m)_{k,index} = sum_{i=0}^{floor(m/k)} C(i, m-ki) with m = index-2.
/// Throws IndexBelowTwo for index < 2 when k >= 2.
Nat max_padovan_like_closed(int k, std::int64_t index);

/// s_{k,n} = 2 + sum_{i=1}^{n-2} sum_{j=0}^{ik-2} C(n-i-1, j), s_{k,1} = 1.
Nat schreier_count_closed(int k, std::int64_t n);

/// s^(m)_{k,n} = sum_{i=1}^{floor((n+1)/(k+1))} C(n-i-1, ik-2), s^(m)_{k,1} = 0.
Nat max_schreier_count_closed(int k, std::int64_t n);

/// |L_{k,n,i}|: sum over i+1 <= jk <= (n-i+1)k of C(n-j-1, i-2) for i >= 2;
/// the single set {nk} for i = 1. Requires k >= 2.
Nat strict_level_count_closed(int k, std::int64_t n, std::int64_t i);

/// |R_{k,n,i}|: sum over i <= jk <= i+k-1, j <= n-i+2 of C(n-j, i-2) for
/// i >= 3; 0 for i = 1 and 1 for i = 2. Requires k >= 2.
Nat relaxed_level_count_closed(int k, std::int64_t n, std::int64_t i);

/// sum_{t=0}^{d} C(r+t, r); equals C(r+d+1, r+1).
Nat hockey_stick_sum(std::int64_t r, std::int64_t d);

}  // namespace schreier::closed_form
