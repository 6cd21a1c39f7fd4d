#pragma once

// Printed worked examples, shared by unit and acceptance tests.

#include <string>

#include "asmproj/ashm.hpp"
#include "asmproj/core.hpp"
#include "asmproj/polytope.hpp"

namespace fixtures {

using asmproj::IntMatrix;
using asmproj::Rational;
using asmproj::RationalMatrix;
using asmproj::TriangleRows;

inline IntMatrix small_asm() {
  return IntMatrix::from_ints({{0, 1, 0, 0}, {1, -1, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}
inline IntMatrix small_asm_partial_sums() {
  return IntMatrix::from_ints({{0, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}});
}
inline TriangleRows small_asm_triangle() { return {{2}, {1, 3}, {1, 2, 3}, {1, 2, 3, 4}}; }

inline IntMatrix diamond() { return IntMatrix::from_ints({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}); }

// Worked construction for v = (4,3,1,4,7,5,4).
inline IntMatrix worked_zero_one() {
  return IntMatrix::from_ints({{0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 1, 1, 0, 0},
                               {0, 0, 0, 0, 1, 1, 1},
                               {1, 0, 0, 1, 1, 1, 0},
                               {1, 1, 0, 0, 1, 1, 1},
                               {1, 1, 0, 1, 1, 1, 1},
                               {1, 1, 1, 1, 1, 1, 1}});
}
inline TriangleRows worked_row_increasing() {
  return {{5}, {4, 5}, {5, 6, 7}, {1, 4, 5, 6}, {1, 2, 5, 6, 7}, {1, 2, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}};
}
inline TriangleRows worked_monotone() {
  return {{5}, {4, 5}, {4, 5, 6}, {1, 5, 6, 7}, {1, 2, 5, 6, 7}, {1, 2, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}};
}
inline IntMatrix worked_asm() {
  return IntMatrix::from_ints({{0, 0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0},
                               {1, 0, 0, -1, 0, 0, 1},
                               {0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0}});
}

// Triangles displayed with f = 8 and f = 6. Row 2 is not strictly increasing.
inline TriangleRows f_display_first() {
  return {{2}, {2, 1}, {2, 3, 5}, {2, 3, 4, 5}, {1, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}};
}
inline TriangleRows f_display_second() {
  return {{1}, {2, 2}, {2, 3, 5}, {2, 3, 4, 5}, {1, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}};
}

inline TriangleRows two_trapezoid_triangle() { return {{3}, {1, 2}, {2, 3, 4}, {1, 2, 3, 4}}; }

inline RationalMatrix rational(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const char* x : row) out.back().push_back(asmproj::parse_rational(x));
  }
  return RationalMatrix::from_rows(out);
}

inline RationalMatrix all_thirds() {
  return rational({{"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}});
}
inline RationalMatrix quarters() {
  return rational({{"1/3", "1/4", "5/12"}, {"1/3", "1/2", "1/6"}, {"1/3", "1/4", "5/12"}});
}
inline RationalMatrix sixths() {
  return rational({{"1/6", "2/3", "1/6"}, {"2/3", "-1/3", "2/3"}, {"1/6", "2/3", "1/6"}});
}
inline RationalMatrix sixteenths() {
  return rational({{"1/16", "3/4", "3/16"}, {"7/8", "-1/2", "5/8"}, {"1/16", "3/4", "3/16"}});
}

// Planes k = 1, 2, 3: anti-identity, diamond, identity.
inline asmproj::Hypermatrix order3_ashm() {
  return {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
          {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}},
          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}
inline IntMatrix order3_ashl() { return IntMatrix::from_ints({{3, 2, 1}, {2, 2, 2}, {1, 2, 3}}); }

// Permutation planes of the Latin square 1 2 3 / 2 3 1 / 3 1 2.
inline asmproj::Hypermatrix latin_ashm() {
  return {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
          {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
          {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
}
inline IntMatrix latin_square() { return IntMatrix::from_ints({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}); }

inline IntMatrix non_ashl() { return IntMatrix::from_ints({{2, 2, 2}, {3, 2, 1}, {1, 2, 3}}); }

// Order-7 grids with their ASHLs.
inline const std::string grid_first =
    "7\n"
    "6 3 1 4 7 5 2\n"
    "3 1-3+6 4 3-4+5 4 2-5+7 5\n"
    "1 4 3-4+5 2-3+4-5+6 3-4+5 4 7\n"
    "4 3-4+5 2-3+4-5+6 +1-2+3-4+5-6+7 2-3+4-5+6 3-4+5 4\n"
    "7 4 3-4+5 2-3+4-5+6 3-4+5 4 1\n"
    "5 2-5+7 4 3-4+5 4 1-3+6 3\n"
    "2 5 7 4 1 3 6\n";
inline IntMatrix ashl_first() {
  return IntMatrix::from_ints({{6, 3, 1, 4, 7, 5, 2},
                               {3, 4, 4, 4, 4, 4, 5},
                               {1, 4, 4, 4, 4, 4, 7},
                               {4, 4, 4, 4, 4, 4, 4},
                               {7, 4, 4, 4, 4, 4, 1},
                               {5, 4, 4, 4, 4, 4, 3},
                               {2, 5, 7, 4, 1, 3, 6}});
}

inline const std::string grid_second =
    "7\n"
    "3 5 4 7 1 2 6\n"
    "1 4 3-4+5 4 6 7 2\n"
    "7 3 1-3+6 3 2 4 5\n"
    "5 7 4 2 3 6 1\n"
    "2 6 3-6+7 6 5 1 4\n"
    "4 1 2-4+6 5 4 3 7\n"
    "6 2 4 1 7 5 3\n";
inline IntMatrix ashl_second() {
  return IntMatrix::from_ints({{3, 5, 4, 7, 1, 2, 6},
                               {1, 4, 4, 4, 6, 7, 2},
                               {7, 3, 4, 3, 2, 4, 5},
                               {5, 7, 4, 2, 3, 6, 1},
                               {2, 6, 4, 6, 5, 1, 4},
                               {4, 1, 4, 5, 4, 3, 7},
                               {6, 2, 4, 1, 7, 5, 3}});
}

inline const std::string grid_third =
    "7\n"
    "1 3 2 4 7 5 6\n"
    "2 4 1 3 5 6 7\n"
    "3 1-3+6 3 2 4 7 5\n"
    "4 3-4+5 4 7 6 1 2\n"
    "5 2-5+7 5 6 3 4 1\n"
    "6 4 7 5 1 2 3\n"
    "7 5 6 1 2 3 4\n";
inline IntMatrix ashl_third() {
  return IntMatrix::from_ints({{1, 3, 2, 4, 7, 5, 6},
                               {2, 4, 1, 3, 5, 6, 7},
                               {3, 4, 3, 2, 4, 7, 5},
                               {4, 4, 4, 7, 6, 1, 2},
                               {5, 4, 5, 6, 3, 4, 1},
                               {6, 4, 7, 5, 1, 2, 3},
                               {7, 5, 6, 1, 2, 3, 4}});
}

}  // namespace fixtures
