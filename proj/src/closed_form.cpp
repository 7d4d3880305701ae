#include "schreier/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "schreier/errors.hpp"

namespace schreier::closed_form {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Nat fibonacci(std::int64_t n) {
  require(n >= -1, "fibonacci index must be >= -1");
  Nat prev(1u);  // F_{-1}
  Nat cur;       // F_0
  for (std::int64_t m = 0; m < n; ++m) {
    Nat next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n == -1 ? prev : cur;
}

Nat padovan_like_closed(int k, std::int64_t n) {
  require(k >= 1, "k must be >= 1");
  require(n >= 0, "n must be >= 0");
  if (k == 1) return fibonacci(n + 1);
  Nat sum;
  const std::int64_t top = floor_div(n - 2, k + 1) + 1;
  for (std::int64_t i = 0; i <= top; ++i) {
    sum += binomial(floor_div(n - i - 1, k) + 1, i);
  }
  return sum;
}

Nat extraction_sum_closed(int k, std::int64_t n) {
  require(k >= 2, "k must be >= 2");
  require(n >= 1, "n must be >= 1");
  Nat sum;
  const std::int64_t top = floor_div(n * k - 1, k + 1);
  for (std::int64_t i = 0; i <= top; ++i) {
    sum += binomial(n - ceil_div(i + 1, k), i);
  }
  return sum;
}

Nat max_padovan_like_closed(int k, std::int64_t index) {
  require(k >= 1, "k must be >= 1");
  if (k == 1) {
    require(index >= 0, "index must be >= 0");
    return fibonacci(index - 1);
  }
  if (index < 2) throw IndexBelowTwo(index);
  const std::int64_t m = index - 2;
  Nat sum;
  for (std::int64_t i = 0; i <= floor_div(m, k); ++i) {
    sum += binomial(i, m - k * i);
  }
  return sum;
}

Nat schreier_count_closed(int k, std::int64_t n) {
  require(k >= 1, "k must be >= 1");
  require(n >= 1, "n must be >= 1");
  if (k == 1) return fibonacci(n);
  if (n == 1) return Nat(1u);
  Nat sum(2u);
  for (std::int64_t i = 1; i <= n - 2; ++i) {
    for (std::int64_t j = 0; j <= i * k - 2; ++j) {
      sum += binomial(n - i - 1, j);
    }
  }
  return sum;
}

Nat max_schreier_count_closed(int k, std::int64_t n) {
  require(k >= 1, "k must be >= 1");
  require(n >= 1, "n must be >= 1");
  if (k == 1) return fibonacci(n - 2);
  if (n == 1) return Nat{};
  Nat sum;
  for (std::int64_t i = 1; i <= floor_div(n + 1, k + 1); ++i) {
    sum += binomial(n - i - 1, i * k - 2);
  }
  return sum;
}

Nat strict_level_count_closed(int k, std::int64_t n, std::int64_t i) {
  require(k >= 2, "k must be >= 2");
  require(n >= 1, "n must be >= 1");
  require(i >= 1, "i must be >= 1");
  if (i == 1) return Nat(1u);
  Nat sum;
  // i+1 <= jk <= (n-i+1)k
  for (std::int64_t j = ceil_div(i + 1, k); j <= n - i + 1; ++j) {
    sum += binomial(n - j - 1, i - 2);
  }
  return sum;
}

Nat relaxed_level_count_closed(int k, std::int64_t n, std::int64_t i) {
  require(k >= 2, "k must be >= 2");
  require(n >= 1, "n must be >= 1");
  require(i >= 1, "i must be >= 1");
  if (i == 1) return Nat{};
  if (i == 2) return Nat(1u);
  Nat sum;
  // i <= jk <= i+k-1 and j <= n-i+2
  const std::int64_t hi = std::min(floor_div(i + k - 1, k), n - i + 2);
  for (std::int64_t j = ceil_div(i, k); j <= hi; ++j) {
    sum += binomial(n - j, i - 2);
  }
  return sum;
}

Nat hockey_stick_sum(std::int64_t r, std::int64_t d) {
  require(r >= 0 && d >= 0, "r and d must be >= 0");
  Nat sum;
  for (std::int64_t t = 0; t <= d; ++t) sum += binomial(r + t, r);
  return sum;
}

}  // namespace schreier::closed_form
