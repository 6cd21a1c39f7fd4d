#include <gtest/gtest.h>

#include "asmproj/enumeration.hpp"
#include "asmproj/galeryser.hpp"
#include "asmproj/synthesis.hpp"
#include "worked_examples.hpp"
#include "test_support.hpp"

using namespace asmproj;

TEST(AsmWithProjection, WorkedExample) {
  const IntVector v = make_vector({4, 3, 1, 4, 7, 5, 4});
  const Asm a = asm_with_projection(v);
  EXPECT_EQ(a.order(), 7u);
  EXPECT_EQ(weighted_projection(a), v);
  // The printed witness has the same projection.
  EXPECT_EQ(weighted_projection(validate_asm(fixtures::worked_asm())), v);
  EXPECT_EQ(asm_with_projection(v), a);
}

TEST(AsmWithProjection, StaircaseGivesIdentity) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(asm_with_projection(staircase(n)).matrix(), identity_matrix(n));
}

TEST(AsmWithProjection, FlatVectorGivesDiamond) {
  EXPECT_EQ(asm_with_projection(make_vector({2, 2, 2})).matrix(), fixtures::diamond());
  std::size_t hits = 0;
  for (const auto& a : enumerate_asms(3)) hits += weighted_projection(a) == make_vector({2, 2, 2});
  EXPECT_EQ(hits, 1u);
}

TEST(AsmWithProjection, Errors) {
  EXPECT_ERROR_KIND(asm_with_projection(make_vector({4, 1, 1})), ErrorKind::NotMajorized);
  EXPECT_ERROR_KIND(asm_with_projection(make_vector({3, 3, 0})), ErrorKind::NonPositiveEntry);
}

TEST(AsmWithProjection, FuzzedErrorsMatchMajorization) {
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::uniform_int_distribution<int> entry(-1, static_cast<int>(n) + 1);
    IntVector v(n);
    Integer total = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      v[k] = entry(test_rng());
      total += v[k];
    }
    // Half the trials get the right total.
    v[n - 1] = trial % 2 ? Integer(n * (n + 1) / 2) - total : Integer(entry(test_rng()));
    bool positive = true;
    for (const auto& x : v) positive = positive && x > 0;
    if (!positive) {
      EXPECT_ERROR_KIND(asm_with_projection(v), ErrorKind::NonPositiveEntry);
    } else if (!majorized_by(v, staircase(n))) {
      EXPECT_ERROR_KIND(asm_with_projection(v), ErrorKind::NotMajorized);
    } else {
      EXPECT_EQ(weighted_projection(asm_with_projection(v)), v);
    }
  }
}

TEST(Synthesize, TraceHasEveryStage) {
  const auto r = synthesize(make_vector({4, 3, 1, 4, 7, 5, 4}), true);
  ASSERT_TRUE(r.trace.has_value());
  const std::string text = format_synthesis_trace(*r.trace);
  EXPECT_EQ(text.find("# 0-1 matrix\n"), 0u);
  EXPECT_NE(text.find("# row-increasing triangle and switches\n"), std::string::npos);
  EXPECT_NE(text.find("# monotone triangle\n"), std::string::npos);
  EXPECT_EQ(column_sums(r.trace->zero_one), make_vector({4, 3, 1, 4, 7, 5, 4}));
  EXPECT_EQ(entry_multiset(r.trace->monotone), make_vector({4, 3, 1, 4, 7, 5, 4}));
  EXPECT_FALSE(synthesize(make_vector({3, 2, 1})).trace.has_value());
}

TEST(ProjectionSetCheck, SmallOrders) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto report = verify_theorem4(n, kDefaultTheoremLimit, 2);
    EXPECT_TRUE(report.passed()) << n;
    EXPECT_EQ(report.projection_count, report.majorized_count);
    EXPECT_EQ(report.constructions_checked, report.majorized_count);
  }
  const auto three = verify_theorem4(3);
  EXPECT_EQ(three.projection_count, 7u);
  EXPECT_EQ(three.majorized_count, 7u);
  EXPECT_EQ(three.asm_count, 7u);
  const auto one = verify_theorem4(1);
  EXPECT_EQ(one.projection_count, 1u);
}

TEST(ProjectionSetCheck, Limit) { EXPECT_ERROR_KIND(verify_theorem4(6), ErrorKind::LimitExceeded); }

TEST(ForwardDirection, EveryProjectionIsMajorized) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& a : enumerate_asms(n)) EXPECT_TRUE(majorized_by(weighted_projection(a), staircase(n)));
}
