#pragma once

// Inversions, inverted trapezoids and the switching procedure that turns a
// row-increasing triangle into a monotone triangle with the same entries.
//
// Steps on a triangle (1-based): north-east (i,j) -> (i-1,j) and south-east
// (i,j) -> (i+1,j+1). An order-2 sub-triangle has apex (i-1,j) and base
// (i,j), (i,j+1); it is identified by its bottom row i and apex column j.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asmproj/core.hpp"

namespace asmproj {

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class InversionDirection { Upward, Downward };

// A pair (larger, smaller) where smaller sits directly north-east (upward)
// or south-east (downward) of larger.
struct Inversion {
  Cell at;  // the larger entry
  InversionDirection direction = InversionDirection::Upward;
  int larger = 0;
  int smaller = 0;

  Cell partner() const {
    return direction == InversionDirection::Upward ? Cell{at.row - 1, at.col}
                                                   : Cell{at.row + 1, at.col + 1};
  }
  friend bool operator==(const Inversion&, const Inversion&) = default;
};

// Maximal run of adjacent inverted sub-triangles between two rows.
struct InvertedTrapezoid {
  int top_row = 0;
  int bottom_row = 0;
  int first_apex = 0;  // apex columns of the first and last sub-triangle
  int last_apex = 0;
  int height = 0;  // rows of the triangle below bottom_row
  std::vector<Inversion> inversions;

  friend bool operator==(const InvertedTrapezoid&, const InvertedTrapezoid&) = default;
};

std::vector<Inversion> find_inversions(const RowIncreasingTriangle& t);

// Number of entries from which some strictly smaller entry is reachable by a
// non-empty sequence of north-east and south-east steps.
std::size_t potential_f(const RowIncreasingTriangle& t);
// Same count on any triangle-shaped array (throws BadShape otherwise).
std::size_t potential_f(const TriangleRows& rows);

// Number of ordered pairs (p, q) of positions with q reachable from p by a
// non-empty step sequence and t(q) < t(p). Switching a trapezoid can leave
// potential_f unchanged or raise it; this count is what strictly drops.
std::size_t inversion_pairs(const RowIncreasingTriangle& t);
std::size_t inversion_pairs(const TriangleRows& rows);

std::vector<InvertedTrapezoid> find_inverted_trapezoids(const RowIncreasingTriangle& t);

// Swaps every inversion of z at once. Throws StaleTrapezoid if z is not a
// current trapezoid of t; the row-increasing and decreasing inversion_pairs
// postconditions are checked and reported as Internal.
RowIncreasingTriangle switch_trapezoid(const RowIncreasingTriangle& t, const InvertedTrapezoid& z);

enum class SwitchOrder {
  BottomUp,  // lowest trapezoid first, then leftmost (default)
  TopDown,   // highest trapezoid first, then leftmost
};

struct SwitchRecord {
  InvertedTrapezoid trapezoid;
  RowIncreasingTriangle after;
  std::size_t f_after = 0;
};

struct MonotonizeResult {
  MonotoneTriangle triangle;
  std::size_t f_initial = 0;
  std::size_t pairs_initial = 0;  // bounds the number of switches
  std::size_t switches = 0;
  std::vector<SwitchRecord> trace;  // empty unless requested
};

MonotonizeResult monotonize(const RowIncreasingTriangle& t, bool trace = false,
                            SwitchOrder order = SwitchOrder::BottomUp);

// Initial triangle, then one block per switch introduced by
// "-- switch height=<h> rows=<i-1>,<i> f=<f after the switch>".
std::string format_trace(const RowIncreasingTriangle& initial, const std::vector<SwitchRecord>& trace);

}  // namespace asmproj
