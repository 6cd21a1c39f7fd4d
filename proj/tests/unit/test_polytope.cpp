#include <gtest/gtest.h>

#include "asmproj/enumeration.hpp"
#include "asmproj/polytope.hpp"
#include "worked_examples.hpp"
#include "random_polytope.hpp"
#include "test_support.hpp"

using namespace asmproj;

namespace {

PolytopeMatrix member(const RationalMatrix& m) { return validate_polytope(m); }
PolytopeMatrix member(const IntMatrix& m) { return validate_polytope(RationalMatrix(m)); }

TBlockTerm term(const char* c, TBlock block) { return {parse_rational(c), block, std::nullopt}; }

}  // namespace

TEST(ValidatePolytope, WorkedMembers) {
  EXPECT_NO_THROW(member(fixtures::all_thirds()));
  EXPECT_NO_THROW(member(fixtures::quarters()));
  EXPECT_NO_THROW(member(fixtures::sixths()));
  EXPECT_NO_THROW(member(fixtures::sixteenths()));
  EXPECT_NO_THROW(member(fixtures::diamond()));
}

TEST(ValidatePolytope, NegativePrefix) {
  const auto m = RationalMatrix(IntMatrix::from_ints({{1, 0, 0}, {-1, 1, 1}, {1, 0, 0}}));
  EXPECT_ERROR_KIND(validate_polytope(m), ErrorKind::NegativePartialSum);
  EXPECT_NE(error_message([&] { validate_polytope(m); }).find("row 2, prefix 1"), std::string::npos);
}

TEST(ValidatePolytope, NegativeSuffix) {
  const auto m = RationalMatrix(IntMatrix::from_ints({{0, 0, 1}, {1, 1, -1}, {0, 0, 1}}));
  EXPECT_NE(error_message([&] { validate_polytope(m); }).find("row 2, suffix 1"), std::string::npos);
}

TEST(ValidatePolytope, LineSum) {
  EXPECT_ERROR_KIND(validate_polytope(fixtures::rational({{"1/2", "1/2"}, {"1/2", "1/3"}})), ErrorKind::LineSumNotOne);
}

TEST(ValidatePolytope, RandomMembersValidate) {
  random_polytope::Generator gen(4);
  for (int trial = 0; trial < 100; ++trial) EXPECT_NO_THROW(validate_polytope(gen.member(test_rng())));
}

TEST(TBlockMatrix, Examples) {
  const TBlock t{1, 1, 2, 2, 1};
  const IntMatrix m = tblock_matrix(t, 3);
  EXPECT_EQ(m, IntMatrix::from_ints({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}));
  EXPECT_EQ(weighted_projection(m), make_vector({1, -1, 0}));
  IntMatrix negated = tblock_matrix(t.negated(), 3);
  negated *= Integer(-1);
  EXPECT_EQ(negated, m);
  EXPECT_EQ(t.depth(), 1);
  EXPECT_EQ((TBlock{2, 1, 3, 2, -1}).depth(), -1);
}

TEST(TBlockMatrix, ProjectionIsDepthTimesColumnDifference) {
  const int n = 5;
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2)
          for (int sign : {1, -1}) {
            const TBlock b{i1, j1, i2, j2, sign};
            IntVector expected(n);
            expected[j1 - 1] = b.depth();
            expected[j2 - 1] = -b.depth();
            EXPECT_EQ(weighted_projection(tblock_matrix(b, n)), expected);
          }
}

TEST(TBlockMatrix, CornerErrors) {
  EXPECT_ERROR_KIND(tblock_matrix({1, 1, 4, 2, 1}, 3), ErrorKind::CornerOutOfRange);
  EXPECT_ERROR_KIND(tblock_matrix({2, 1, 1, 2, 1}, 3), ErrorKind::CornerOutOfRange);
  EXPECT_ERROR_KIND(tblock_matrix({0, 1, 1, 2, 1}, 3), ErrorKind::CornerOutOfRange);
}

TEST(BlockThrough, Canonicalizes) {
  EXPECT_EQ(block_through(1, 1, 2, 2), (TBlock{1, 1, 2, 2, 1}));
  EXPECT_EQ(block_through(3, 1, 2, 2), (TBlock{2, 1, 3, 2, -1}));
  EXPECT_EQ(tblock_matrix(block_through(3, 1, 2, 2), 3)(2, 0), 1);
}

TEST(ApplyTerms, WorkedIdentities) {
  const RationalMatrix a(fixtures::diamond());
  const std::vector<TBlockTerm> thirds{term("1/3", {1, 1, 2, 2, 1}), term("-1/3", {1, 2, 2, 3, 1}),
                                       term("1/3", {2, 2, 3, 3, 1}), term("-1/3", {2, 1, 3, 2, 1})};
  EXPECT_EQ(apply_terms(a, thirds), fixtures::all_thirds());
  const std::vector<TBlockTerm> sixteenths{term("1/16", {1, 1, 2, 2, 1}), term("-1/16", {2, 1, 3, 2, 1}),
                                           term("3/16", {2, 2, 3, 3, 1}), term("-3/16", {1, 2, 2, 3, 1})};
  EXPECT_EQ(apply_terms(a, sixteenths), fixtures::sixteenths());
}

TEST(ApplyTerms, Trivial) {
  const RationalMatrix id(identity_matrix(2));
  EXPECT_EQ(apply_terms(id, {}), id);
  const RationalMatrix swap(IntMatrix::from_ints({{0, 1}, {1, 0}}));
  EXPECT_EQ(apply_terms(id, {term("-1", {1, 1, 2, 2, 1})}), swap);
  EXPECT_EQ(apply_terms(id, {term("1", {1, 1, 2, 2, -1})}), swap);
}

TEST(DecomposeTblocks, Examples) {
  const auto a = member(fixtures::diamond());
  const auto b = member(fixtures::all_thirds());
  const auto terms = decompose_tblocks(a, b);
  EXPECT_LE(terms.size(), 9u);
  EXPECT_EQ(apply_terms(a.matrix(), terms), b.matrix());
  EXPECT_TRUE(decompose_tblocks(a, a).empty());

  const auto swap = member(IntMatrix::from_ints({{0, 1}, {1, 0}}));
  const auto id = member(identity_matrix(2));
  const auto single = decompose_tblocks(swap, id);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].coefficient, 1);
  EXPECT_EQ(single[0].block, (TBlock{1, 1, 2, 2, 1}));
  EXPECT_ERROR_KIND(decompose_tblocks(id, a), ErrorKind::OrderMismatch);
}

TEST(DecomposeTblocks, RandomPairsReconstruct) {
  for (std::size_t n = 1; n <= 4; ++n) {
    random_polytope::Generator gen(n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = member(gen.member(test_rng()));
      const auto b = member(gen.member(test_rng()));
      const auto terms = decompose_tblocks(a, b);
      EXPECT_LE(terms.size(), n * n);
      EXPECT_EQ(apply_terms(a.matrix(), terms), b.matrix());
    }
  }
}

TEST(DecomposePaired, Examples) {
  const auto a = member(fixtures::diamond());
  const auto b = member(fixtures::sixteenths());
  const auto terms = decompose_paired(a, b);
  EXPECT_EQ(apply_terms(a.matrix(), terms), b.matrix());
  for (const auto& t : terms) {
    ASSERT_TRUE(t.partner.has_value());
    EXPECT_EQ(t.block.depth(), -t.partner->depth());
  }
  EXPECT_TRUE(decompose_paired(a, a).empty());
  EXPECT_ERROR_KIND(decompose_paired(a, member(identity_matrix(3))), ErrorKind::ProjectionMismatch);
}

TEST(DecomposePaired, AllEqualProjectionAsmPairs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto asms = enumerate_asms(n);
    for (const auto& x : asms)
      for (const auto& y : asms) {
        const auto a = member(x.matrix()), b = member(y.matrix());
        if (weighted_projection(x) != weighted_projection(y)) {
          EXPECT_ERROR_KIND(decompose_paired(a, b), ErrorKind::ProjectionMismatch);
          continue;
        }
        const auto terms = decompose_paired(a, b);
        EXPECT_EQ(apply_terms(a.matrix(), terms), b.matrix());
      }
  }
}

TEST(DecomposePaired, RandomPairsReconstruct) {
  for (std::size_t n = 2; n <= 4; ++n) {
    random_polytope::Generator gen(n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto [x, y] = gen.equal_projection_pair(test_rng());
      const auto a = member(x), b = member(y);
      const auto terms = decompose_paired(a, b);
      EXPECT_EQ(apply_terms(a.matrix(), terms), b.matrix());
      for (const auto& t : terms) EXPECT_EQ(t.block.depth(), -t.partner->depth());
    }
  }
}

TEST(PairedTerms, PreserveProjection) {
  // Any opposite-depth pair leaves the projection unchanged.
  const RationalMatrix a(identity_matrix(4));
  const std::vector<TBlockTerm> terms{{parse_rational("2/7"), {1, 1, 3, 4, 1}, TBlock{2, 1, 4, 4, -1}},
                                      {parse_rational("-5"), {1, 2, 2, 3, 1}, TBlock{3, 2, 4, 3, -1}}};
  EXPECT_EQ(weighted_projection(apply_terms(a, terms)), weighted_projection(a));
}

TEST(Rationals, FormatAndParse) {
  EXPECT_EQ(format_rational(parse_rational("6/8")), "3/4");
  EXPECT_EQ(format_rational(parse_rational("4/2")), "2");
  EXPECT_EQ(format_rational(parse_rational("-1/3")), "-1/3");
  EXPECT_ERROR_KIND(parse_rational("1/0"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_rational("x"), ErrorKind::Parse);
  EXPECT_EQ(format_term(term("2", {1, 1, 2, 2, 1})), "2/1  T(1,1;2,2,+)");
  EXPECT_EQ(format_term({parse_rational("1/16"), {1, 1, 2, 2, 1}, TBlock{2, 1, 3, 2, -1}}),
            "1/16  T(1,1;2,2,+)  S(2,1;3,2,-)");
}

TEST(Rationals, JsonRoundTrip) {
  const RationalMatrix m = fixtures::sixteenths();
  EXPECT_EQ(parse_rational_matrix(rational_matrix_to_json(m).dump()), m);
  EXPECT_EQ(parse_rational_matrix(R"({"n":2,"rows":[[1,0],["0","1/1"]]})"), RationalMatrix(identity_matrix(2)));
  EXPECT_ERROR_KIND(parse_rational_matrix(R"({"n":2,"rows":[[1,0]]})"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_rational_matrix("not json"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_rational_matrix(R"({"n":2,"rows":[[1,0],[0,true]]})"), ErrorKind::Parse);
}
