#include "schreier/oracle.hpp"

#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

#include "schreier/errors.hpp"

namespace schreier::oracle {
namespace {

// Recursive subset generator over explicit element values; shares nothing
// with the bitmask scan under test.
std::vector<std::vector<std::int64_t>> naive_subsets(
    const std::vector<std::int64_t>& universe) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == universe.size()) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    rec(at + 1);
    cur.push_back(universe[at]);
    rec(at + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

std::vector<std::int64_t> multiples(int k, int n) {
  std::vector<std::int64_t> u;
  for (int i = 1; i <= n; ++i) u.push_back(static_cast<std::int64_t>(i) * k);
  return u;
}

std::uint64_t naive_count(int k, int n, Mode mode) {
  std::uint64_t c = 0;
  for (const auto& f : naive_subsets(multiples(k, n))) {
    if (f.back() != static_cast<std::int64_t>(n) * k) continue;
    const auto lo = f.front();
    const auto sz = static_cast<std::int64_t>(f.size());
    c += mode == Mode::Schreier ? lo >= sz
         : mode == Mode::MaximalSchreier ? lo == sz
                                         : lo > sz;
  }
  return c;
}

// F_n with F_{-1} = 1, F_0 = 0, written out independently of the library.
std::uint64_t fib(int n) {
  std::uint64_t prev = 1, cur = 0;
  for (int m = 0; m < n; ++m) {
    const auto next = prev + cur;
    prev = cur;
    cur = next;
  }
  return n == -1 ? 1 : cur;
}

TEST(EnumerateTest, SmallExamples) {
  const auto s22 = enumerate({2, 2, Mode::Schreier, true});
  ASSERT_EQ(s22.size(), 2u);
  EXPECT_EQ(s22[0], SubsetWitness(2, {4}));
  EXPECT_EQ(s22[1], SubsetWitness(2, {2, 4}));

  const auto s41 = enumerate({4, 1, Mode::Schreier, true});
  ASSERT_EQ(s41.size(), 1u);
  EXPECT_EQ(s41[0], SubsetWitness(4, {4}));

  const auto m33 = enumerate({3, 3, Mode::MaximalSchreier, true});
  ASSERT_EQ(m33.size(), 1u);
  EXPECT_EQ(m33[0], SubsetWitness(3, {3, 6, 9}));
}

TEST(EnumerateTest, WitnessesMatchNaive) {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 9; ++n) {
      for (Mode mode : {Mode::Schreier, Mode::MaximalSchreier, Mode::StrictSchreier}) {
        const auto got = enumerate({k, n, mode, true});
        std::vector<SubsetWitness> want;
        for (const auto& f : naive_subsets(multiples(k, n))) {
          if (f.back() != static_cast<std::int64_t>(n) * k) continue;
          const auto sz = static_cast<std::int64_t>(f.size());
          const bool ok = mode == Mode::Schreier ? f.front() >= sz
                          : mode == Mode::MaximalSchreier ? f.front() == sz
                                                          : f.front() > sz;
          if (ok) want.emplace_back(k, f);
        }
        auto sorted_got = got;
        std::sort(sorted_got.begin(), sorted_got.end());
        std::sort(want.begin(), want.end());
        ASSERT_EQ(sorted_got, want) << "k=" << k << " n=" << n;
      }
    }
  }
}

TEST(EnumerateTest, WithoutRequiredMaximum) {
  // Every nonempty Schreier subset of {1, 2, 3}: {1}, {2}, {3}, {2,3}.
  EXPECT_EQ(count({1, 3, Mode::Schreier, false}), Nat(4u));
  EXPECT_EQ(enumerate({1, 3, Mode::Schreier, false}).size(), 4u);
}

TEST(EnumerateTest, DeterministicOrder) {
  EXPECT_EQ(enumerate({2, 8, Mode::Schreier, true}),
            enumerate({2, 8, Mode::Schreier, true}));
}

TEST(CountTest, KnownValues) {
  EXPECT_EQ(count({3, 7, Mode::Schreier, true}), Nat(38u));
  EXPECT_EQ(count({2, 10, Mode::MaximalSchreier, true}), Nat(37u));
  EXPECT_EQ(count({1, 9, Mode::Schreier, true}), Nat(34u));
}

TEST(CountTest, MatchesNaive) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 12; ++n) {
      for (Mode mode : {Mode::Schreier, Mode::MaximalSchreier, Mode::StrictSchreier}) {
        ASSERT_EQ(count({k, n, mode, true}), Nat(naive_count(k, n, mode)))
            << "k=" << k << " n=" << n;
      }
    }
  }
}

TEST(CountTest, FibonacciBaseline) {
  for (int n = 1; n <= 22; ++n) {
    EXPECT_EQ(count({1, n, Mode::Schreier, true}), Nat(fib(n))) << n;
    EXPECT_EQ(count({1, n, Mode::MaximalSchreier, true}), Nat(fib(n - 2))) << n;
  }
}

TEST(CountTest, Theorem3AtOracleLevel) {
  for (int k = 1; k <= 5; ++k) {
    for (int n = 1; n <= 19; ++n) {
      const Nat s = count({k, n, Mode::Schreier, true});
      const Nat s1 = count({k, n + 1, Mode::Schreier, true});
      const Nat sm = count({k, n, Mode::MaximalSchreier, true});
      ASSERT_EQ(sm + s1, s + s) << "k=" << k << " n=" << n;
    }
  }
}

TEST(CountTest, CapExceeded) {
  EXPECT_THROW(count({2, 25, Mode::Schreier, true}), CapExceeded);
  EXPECT_THROW(enumerate({2, 25, Mode::Schreier, true}), CapExceeded);
  EXPECT_NO_THROW(count({2, 25, Mode::Schreier, true}, 25));
  EXPECT_THROW(count({0, 3, Mode::Schreier, true}), std::invalid_argument);
}

TEST(CountByCardinalityTest, StatedConstants) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 10; ++n) {
      EXPECT_EQ(count_by_cardinality(k, n, true, 1), Nat(k * n >= 2 ? 1u : 0u));
      if (k >= 2) {
        EXPECT_EQ(count_by_cardinality(k, n, false, 1), Nat(0u));
        EXPECT_EQ(count_by_cardinality(k, n, false, 2), Nat(1u));
      }
    }
  }
}

TEST(CountByCardinalityTest, FrozenValues) {
  // Computed by an itertools.combinations enumeration over explicit sets.
  EXPECT_EQ(count_by_cardinality(2, 8, true, 3), Nat(15u));
  EXPECT_EQ(count_by_cardinality(3, 10, true, 4), Nat(56u));
  EXPECT_EQ(count_by_cardinality(2, 8, false, 4), Nat(15u));
  EXPECT_EQ(count_by_cardinality(4, 12, false, 5), Nat(120u));
}

TEST(CountByCardinalityTest, LevelsPartitionStrictSets) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 16; ++n) {
      Nat sum;
      for (int i = 1; i <= n; ++i) sum += count_by_cardinality(k, n, true, i);
      const Nat s = count({k, n, Mode::Schreier, true});
      const Nat sm = count({k, n, Mode::MaximalSchreier, true});
      ASSERT_EQ(sum + sm, s) << "k=" << k << " n=" << n;
    }
  }
}

TEST(CountByCardinalityTest, RelaxedUsesOneMoreElement) {
  EXPECT_THROW(count_by_cardinality(2, 24, false, 3), CapExceeded);
  EXPECT_NO_THROW(count_by_cardinality(2, 24, true, 3));
  EXPECT_THROW(count_by_cardinality(2, 5, true, 0), std::invalid_argument);
}

TEST(PhiTest, Examples) {
  EXPECT_TRUE(verify_phi_injection(2, 3));
  EXPECT_TRUE(verify_phi_injection(1, 1));
  EXPECT_TRUE(verify_phi_injection(4, 6));
  EXPECT_THROW(verify_phi_injection(2, 24), CapExceeded);
}

TEST(PartitionTest, Examples) {
  EXPECT_TRUE(verify_partition_identity(2, 5));
  EXPECT_TRUE(verify_partition_identity(3, 4));
  EXPECT_TRUE(verify_partition_identity(2, 1));
}

TEST(PartitionTest, Range) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 12; ++n) {
      EXPECT_TRUE(verify_partition_identity(k, n)) << "k=" << k << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace schreier::oracle
