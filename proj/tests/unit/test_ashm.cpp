#include <gtest/gtest.h>

#include <set>

#include "asmproj/ashm.hpp"
#include "asmproj/enumeration.hpp"
#include "worked_examples.hpp"
#include "test_support.hpp"

using namespace asmproj;

namespace {

std::vector<IntMatrix> all_order3_ashls() {
  std::vector<IntMatrix> out;
  for (const auto& a : enumerate_ashms_order3()) out.push_back(ashl(a));
  return out;
}

}  // namespace

TEST(ValidateAshm, OrderThreeExample) {
  const Ashm a = validate_ashm(fixtures::order3_ashm());
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(a.at(1, 1, 1), -1);
  EXPECT_EQ(a.plane(1), fixtures::diamond());
}

TEST(ValidateAshm, StackedIdentitiesFailVertically) {
  const Hypermatrix h(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_ERROR_KIND(validate_ashm(h), ErrorKind::LineNotAlternating);
  EXPECT_NE(error_message([&] { validate_ashm(h); }).find("vertical line (1,1)"), std::string::npos);
}

TEST(ValidateAshm, ShapeAndRange) {
  EXPECT_ERROR_KIND(validate_ashm({{{1}}, {{0}}}), ErrorKind::BadShape);
  EXPECT_ERROR_KIND(validate_ashm({{{2}}}), ErrorKind::EntryOutOfRange);
  EXPECT_NO_THROW(validate_ashm({{{1}}}));
}

TEST(ValidateAshm, RowLineChecked) {
  // Plane 1 has a column (1,1,-1) pattern that is not an ASM.
  Hypermatrix h = fixtures::order3_ashm();
  h[0][0][2] = 0;
  EXPECT_ERROR_KIND(validate_ashm(h), ErrorKind::LineNotAlternating);
}

TEST(Ashl, OrderThreeExamples) {
  EXPECT_EQ(ashl(validate_ashm(fixtures::order3_ashm())), fixtures::order3_ashl());
  EXPECT_EQ(ashl(validate_ashm(fixtures::latin_ashm())), fixtures::latin_square());
}

TEST(Ashl, OrderSevenGrids) {
  const std::pair<std::string, IntMatrix> cases[] = {{fixtures::grid_first, fixtures::ashl_first()},
                                                     {fixtures::grid_second, fixtures::ashl_second()},
                                                     {fixtures::grid_third, fixtures::ashl_third()}};
  for (const auto& [grid, expected] : cases) {
    const Ashm a = parse_ashm(grid);
    EXPECT_EQ(ashl(a), expected);
    EXPECT_TRUE(check_lines_majorized(expected));
    EXPECT_TRUE(check_outer_lines_permutation(expected));
    EXPECT_TRUE(plane_line_counts_bounded(a));
    EXPECT_TRUE(constant_lines_have_clean_neighbours(a));
  }
}

TEST(GridNotation, CentreCell) {
  const std::string grid = grid_notation(validate_ashm(fixtures::order3_ashm()));
  EXPECT_EQ(grid, "3\n+3 +2 +1\n+2 +1-2+3 +2\n+1 +2 +3\n");
}

TEST(GridNotation, RoundTripsExhaustive) {
  for (const auto& a : enumerate_ashms_order3()) {
    EXPECT_EQ(validate_ashm(parse_grid_notation(grid_notation(a))), a);
    EXPECT_EQ(parse_ashm(ashm_to_json(a).dump()), a);
  }
  const Ashm big = parse_ashm(fixtures::grid_first);
  EXPECT_EQ(parse_ashm(grid_notation(big)), big);
}

TEST(GridNotation, Malformed) {
  EXPECT_ERROR_KIND(parse_grid_notation("1\n2\n"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_grid_notation("2\n1 2\n2\n"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_grid_notation("2\n1 2\n2 1+x\n"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_grid_notation("2\n1 2\n2 2-1\n"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_grid_notation("2\n1 2\n2 12\n"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_ashm(R"({"n":2,"planes":[[[1,0],[0,1]]]})"), ErrorKind::BadShape);
  EXPECT_ERROR_KIND(parse_ashm(R"({"n":2,"planes":"x"})"), ErrorKind::Parse);
}

TEST(CheckLines, Examples) {
  EXPECT_TRUE(check_lines_majorized(fixtures::order3_ashl()));
  EXPECT_TRUE(check_outer_lines_permutation(fixtures::order3_ashl()));
  EXPECT_TRUE(check_lines_majorized(fixtures::non_ashl()));
  EXPECT_FALSE(check_outer_lines_permutation(fixtures::non_ashl()));
  EXPECT_FALSE(check_lines_majorized(IntMatrix::from_ints({{3, 3, 3}, {1, 2, 3}, {2, 1, 3}})));
  EXPECT_TRUE(check_outer_lines_permutation(fixtures::latin_square()));
}

TEST(EnumerateAshms, ContainsExampleAndAgreesWithCellwiseSearch) {
  const auto by_planes = enumerate_ashms_order3();
  EXPECT_EQ(by_planes, enumerate_ashms_cellwise(3));
  const Ashm example = validate_ashm(fixtures::order3_ashm());
  EXPECT_NE(std::find(by_planes.begin(), by_planes.end(), example), by_planes.end());
  EXPECT_EQ(std::set<Ashm>(by_planes.begin(), by_planes.end()).size(), by_planes.size());
}

TEST(EnumerateAshms, CellwiseSmallOrders) {
  EXPECT_EQ(enumerate_ashms_cellwise(1).size(), 1u);
  // Order 2: the two permutation planes must alternate vertically too.
  EXPECT_EQ(enumerate_ashms_cellwise(2).size(), 2u);
}

TEST(EnumerateAshms, OrderThreeProperties) {
  const auto ashls = all_order3_ashls();
  for (const auto& a : enumerate_ashms_order3()) {
    const IntMatrix l = ashl(a);
    EXPECT_TRUE(check_lines_majorized(l));
    EXPECT_TRUE(check_outer_lines_permutation(l));
    EXPECT_TRUE(plane_line_counts_bounded(a));
    EXPECT_TRUE(constant_lines_have_clean_neighbours(a));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NO_THROW(validate_asm(a.plane(k)));
  }
  EXPECT_EQ(std::count(ashls.begin(), ashls.end(), fixtures::non_ashl()), 0);
}

TEST(OccurrenceProfile, OrderThreeExhaustive) {
  const auto p = occurrence_profile(2, all_order3_ashls());
  EXPECT_EQ(p.line_max, (std::vector<int>{1, 3, 1}));
}

TEST(OccurrenceProfile, OrderSevenWitness) {
  const auto p = occurrence_profile(4, {fixtures::ashl_first()});
  EXPECT_EQ(p.row_max[1], 5);
  EXPECT_EQ(p.column_max[1], 5);
  EXPECT_EQ(p.row_max[5], 5);
  EXPECT_EQ(p.line_max[3], 7);
  const auto second = occurrence_profile(4, {fixtures::ashl_second()});
  EXPECT_EQ(second.column_max[2], 7);
}

TEST(OccurrenceProfile, AbsentValue) {
  const auto p = occurrence_profile(9, all_order3_ashls());
  EXPECT_EQ(p.line_max, (std::vector<int>{0, 0, 0}));
  EXPECT_TRUE(occurrence_profile(1, {}).line_max.empty());
}
