#include "schreier/recurrence.hpp"

#include <gtest/gtest.h>

#include "schreier/closed_form.hpp"
#include "schreier/errors.hpp"
#include "schreier/polyengine.hpp"

namespace schreier::recurrence {
namespace {

std::vector<Nat> nats(std::initializer_list<unsigned> xs) {
  return {xs.begin(), xs.end()};
}

TEST(GenerateTest, PadovanLikeRows) {
  EXPECT_EQ(gen_padovan_like(2, 17),
            nats({1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65, 86}));
  EXPECT_EQ(gen_padovan_like(4, 12), nats({1, 1, 2, 2, 2, 2, 3, 4, 4, 4, 5, 7}));
  EXPECT_EQ(gen_padovan_like(1, 8), nats({1, 1, 2, 3, 5, 8, 13, 21}));
}

TEST(GenerateTest, MaxPadovanLikeRows) {
  EXPECT_EQ(gen_max_padovan_like(3, 18),
            nats({0, 0, 1, 0, 0, 1, 1, 0, 1, 2, 1, 1, 3, 3, 2, 4, 6, 5}));
  EXPECT_EQ(gen_max_padovan_like(1, 8), nats({1, 0, 1, 1, 2, 3, 5, 8}));
}

TEST(GenerateTest, CorollaryRows) {
  EXPECT_EQ(gen_s_by_corollary(3, 15),
            nats({1, 2, 4, 7, 12, 21, 38, 70, 129, 236, 429, 778, 1412, 2567, 4672}));
  EXPECT_EQ(gen_sm_by_corollary(4, 15),
            nats({0, 0, 0, 1, 3, 6, 10, 15, 22, 35, 64, 129, 265, 529, 1013}));
  EXPECT_EQ(gen_sm_by_corollary(1, 6), nats({1, 0, 1, 1, 2, 3}));
}

TEST(GenerateTest, CorollaryInitialBlocks) {
  for (int k = 2; k <= 10; ++k) {
    const auto s = schreier_corollary_spec(k);
    ASSERT_EQ(s.initial_terms.size(), static_cast<std::size_t>(k + 1));
    for (int i = 0; i < k; ++i) EXPECT_EQ(s.initial_terms[i], Nat(1ull << i));
    EXPECT_EQ(s.initial_terms[k], Nat((1ull << k) - 1));

    const auto m = max_schreier_corollary_spec(k);
    ASSERT_EQ(m.initial_terms.size(), static_cast<std::size_t>(k + 1));
    for (int i = 0; i < k - 1; ++i) EXPECT_EQ(m.initial_terms[i], Nat(0u));
    EXPECT_EQ(m.initial_terms[k - 1], Nat(1u));
    EXPECT_EQ(m.initial_terms[k], Nat(static_cast<unsigned>(k - 1)));
  }
}

TEST(GenerateTest, CorollaryAgreesWithExtraction) {
  for (int k = 1; k <= 10; ++k) {
    const auto s = gen_s_by_corollary(k, 60);
    const auto m = gen_sm_by_corollary(k, 60);
    for (int n = 1; n <= 60; ++n) {
      ASSERT_EQ(s[n - 1], s_by_extraction(k, n)) << "k=" << k << " n=" << n;
      ASSERT_EQ(m[n - 1], sm_by_extraction(k, n)) << "k=" << k << " n=" << n;
    }
  }
}

TEST(GenerateTest, MatchesClosedForm) {
  for (int k = 1; k <= 6; ++k) {
    const auto a = gen_padovan_like(k, 401);
    for (std::int64_t n = 0; n <= 400; ++n) {
      ASSERT_EQ(a[n], closed_form::padovan_like_closed(k, n)) << k << " " << n;
    }
  }
  for (int k = 2; k <= 6; ++k) {
    const auto a = gen_max_padovan_like(k, 401);
    for (std::int64_t n = 2; n <= 400; ++n) {
      ASSERT_EQ(a[n], closed_form::max_padovan_like_closed(k, n)) << k << " " << n;
    }
  }
}

TEST(GenerateTest, NegativeTermDetected) {
  // a_n = a_{n-1} - 2 a_{n-2} goes negative at n = 2.
  const RecurrenceSpec spec{nats({1, 1}), SignedRule{{Int(1), Int(-2)}}};
  EXPECT_THROW(generate(spec, 5), NegativeTermDetected);
  EXPECT_EQ(generate(spec, 2).size(), 2u);
}

TEST(GenerateTest, TooFewInitialTerms) {
  const RecurrenceSpec spec{nats({1}), PadovanRule{2}};
  EXPECT_THROW(generate(spec, 5), std::invalid_argument);
}

TEST(ExtractionTest, Values) {
  EXPECT_EQ(s_by_extraction(3, 7), Nat(38u));
  EXPECT_EQ(sm_by_extraction(2, 10), Nat(37u));
  EXPECT_EQ(s_by_extraction(1, 13), Nat(233u));
}

TEST(SmFromSTest, Examples) {
  EXPECT_EQ(sm_from_s(1, 7), Nat(5u));
  EXPECT_EQ(sm_from_s(3, 9), Nat(22u));
  EXPECT_EQ(sm_from_s(4, 14), Nat(529u));
}

TEST(SmFromSTest, BackendsAgree) {
  const SchreierBackend closed = [](int k, std::int64_t n) {
    return closed_form::schreier_count_closed(k, n);
  };
  for (int k = 1; k <= 6; ++k) {
    for (std::int64_t n = 1; n <= 60; ++n) {
      ASSERT_EQ(sm_from_s(k, n, closed), sm_from_s(k, n)) << k << " " << n;
    }
  }
}

TEST(SmFromSTest, BadBackendThrows) {
  const SchreierBackend growing = [](int, std::int64_t n) {
    return Nat(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) * 10);
  };
  EXPECT_THROW(sm_from_s(2, 1, growing), NegativeTermDetected);
}

TEST(SequenceTermsTest, Bounds) {
  EXPECT_EQ(sequence_terms(SequenceId::fibonacci(), -1, 5), nats({1, 0, 1, 1, 2}));
  EXPECT_EQ(sequence_terms(SequenceId::schreier(2), 3, 3), nats({3, 5, 9}));
  EXPECT_EQ(sequence_terms(SequenceId::max_padovan_like(2), 2, 3), nats({1, 0, 1}));
  EXPECT_THROW(sequence_terms(SequenceId::schreier(2), 0, 3), std::invalid_argument);
  EXPECT_THROW(sequence_terms(SequenceId::padovan_like(2), -1, 3), std::invalid_argument);
  EXPECT_TRUE(sequence_terms(SequenceId::padovan_like(2), 0, 0).empty());
}

TEST(SatisfiesTest, Examples) {
  const auto a2 = gen_padovan_like(2, 50);
  EXPECT_TRUE(satisfies(std::span<const Nat>(a2), IntPolynomial{1, 0, -1, -1}, 49));

  const auto s2 = gen_s_by_corollary(2, 50);
  EXPECT_TRUE(satisfies(std::span<const Nat>(s2), IntPolynomial{1, -2, 1, -1}, 49));

  const auto f = sequence_terms(SequenceId::fibonacci(), 0, 20);
  EXPECT_TRUE(satisfies(std::span<const Nat>(f), IntPolynomial{1, -1, -1}, 19));
  EXPECT_FALSE(satisfies(std::span<const Nat>(f), IntPolynomial{1, -1, 0, -1}, 19));

  EXPECT_TRUE(satisfies(std::span<const Nat>(f), IntPolynomial{}, 19));
  EXPECT_THROW(satisfies(std::span<const Nat>(f), IntPolynomial{1, -1}, 20),
               std::invalid_argument);
}

TEST(SatisfiesTest, ClosureUnderShiftAndSum) {
  for (int k = 1; k <= 4; ++k) {
    const auto a = gen_padovan_like(k, 300);
    const std::span<const Nat> seq(a);
    const auto p = polyengine::build_p(k);
    ASSERT_TRUE(satisfies(seq, p, 299));
    for (std::size_t l = 0; l <= 5; ++l) {
      const auto shifted = p.shifted(l);
      EXPECT_TRUE(satisfies(seq, shifted, 299)) << "k=" << k << " l=" << l;
      EXPECT_TRUE(satisfies(seq, p + shifted, 299)) << "k=" << k << " l=" << l;
      EXPECT_TRUE(satisfies(seq, p * IntPolynomial{1, -3, 5}, 299));
    }
    // q_k is a multiple of p_k, so every a_k satisfies it too.
    EXPECT_TRUE(satisfies(seq, polyengine::build_q(k), 299)) << "k=" << k;
  }
}

TEST(SatisfiesTest, IntSpanOverload) {
  // Signed values obeying a_n = a_{n-1} + a_{n-2}.
  const std::vector<Int> seq{Int(2), Int(-1), Int(1), Int(0), Int(1)};
  EXPECT_TRUE(satisfies(std::span<const Int>(seq), IntPolynomial{1, -1, -1}, 4));
  EXPECT_FALSE(satisfies(std::span<const Int>(seq), IntPolynomial{1, 1, -1}, 4));
}

}  // namespace
}  // namespace schreier::recurrence
