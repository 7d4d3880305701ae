#include "schreier/polyengine.hpp"

#include <gtest/gtest.h>

#include "schreier/recurrence.hpp"

namespace schreier::polyengine {
namespace {

TEST(BuildTest, SmallCases) {
  EXPECT_EQ(build_p(2), (IntPolynomial{1, 0, -1, -1}));
  EXPECT_EQ(build_q(2), (IntPolynomial{1, 0, -2, 0, 1, 0, -1}));
  EXPECT_EQ(build_cofactor(2), (IntPolynomial{1, 0, -1, 1}));
  EXPECT_EQ(build_p(1), (IntPolynomial{1, -1, -1}));
  EXPECT_EQ(build_q(1), (IntPolynomial{1, -1, -1}));
  EXPECT_EQ(build_cofactor(1), (IntPolynomial{1}));
  EXPECT_THROW(build_p(0), std::invalid_argument);
}

TEST(BuildTest, Degrees) {
  for (int k = 1; k <= 64; ++k) {
    EXPECT_EQ(build_p(k).degree(), k + 1);
    EXPECT_EQ(build_q(k).degree(), k * (k + 1));
    EXPECT_EQ(build_cofactor(k).degree(), k * k - 1);
  }
}

TEST(BuildTest, QCoefficientAtKSquared) {
  for (int k = 2; k <= 64; ++k) {
    const Int want = k % 2 == 0 ? 1 : -1;
    EXPECT_EQ(build_q(k).coefficient(static_cast<std::size_t>(k * k)), want) << k;
  }
}

TEST(FactorizationTest, HoldsUpTo64) {
  for (int k = 1; k <= 64; ++k) {
    ASSERT_TRUE(verify_factorization(k)) << k;
    const auto quotient = poly_divides(build_p(k), build_q(k));
    ASSERT_TRUE(quotient.has_value()) << k;
    EXPECT_EQ(*quotient, build_cofactor(k));
  }
}

TEST(FactorizationTest, NeighbouringQDoesNotFactor) {
  // p_k does not divide q_{k+1} once the degrees allow it to be checked.
  for (int k = 2; k <= 10; ++k) {
    EXPECT_FALSE(poly_divides(build_p(k), build_q(k + 1)).has_value()) << k;
  }
}

TEST(CompressTest, Examples) {
  EXPECT_EQ(*compress(build_q(2), 2), (IntPolynomial{1, -2, 1, -1}));
  EXPECT_EQ(*compress(IntPolynomial{1, 0, 0, 5}, 3), (IntPolynomial{1, 5}));
  EXPECT_FALSE(compress(build_p(2), 2).has_value());
  EXPECT_EQ(*compress(IntPolynomial{}, 4), IntPolynomial{});
  EXPECT_THROW(compress(build_p(2), 0), std::invalid_argument);
}

TEST(CompressTest, CompressedQIsCorollaryPolynomial) {
  for (int k = 1; k <= 64; ++k) {
    const auto c = compress(build_q(k), static_cast<std::size_t>(k));
    ASSERT_TRUE(c.has_value()) << k;
    EXPECT_EQ(*c, corollary_polynomial(k)) << k;
  }
  EXPECT_EQ(corollary_polynomial(2), (IntPolynomial{1, -2, 1, -1}));
  EXPECT_EQ(corollary_polynomial(3), (IntPolynomial{1, -3, 3, -1, -1}));
}

TEST(CompressTest, SpacedSubsequenceSatisfiesCorollaryPolynomial) {
  for (int k = 1; k <= 6; ++k) {
    const auto a = recurrence::gen_padovan_like(k, 200 * static_cast<std::size_t>(k));
    for (int offset = 0; offset < k; ++offset) {
      std::vector<Nat> sub;
      for (std::size_t i = static_cast<std::size_t>(offset); i < a.size(); i += k) {
        sub.push_back(a[i]);
      }
      EXPECT_TRUE(recurrence::satisfies(std::span<const Nat>(sub),
                                        corollary_polynomial(k), sub.size() - 1))
          << "k=" << k << " offset=" << offset;
    }
  }
}

}  // namespace
}  // namespace schreier::polyengine
