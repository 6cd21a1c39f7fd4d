#pragma once

// Majorization arithmetic and (0,1)-matrices with row sums (1,...,n).

#include <cstddef>

#include "asmproj/core.hpp"

namespace asmproj {

// result_k = #{i : x_i >= k} for k = 1..length. Throws NegativeEntry.
IntVector conjugate(const IntVector& x, std::size_t length);

// x majorized by y: descending prefix sums of x never exceed those of y and
// the totals agree. Throws LengthMismatch.
bool majorized_by(const IntVector& x, const IntVector& y);

// (n, n-1, ..., 1).
IntVector staircase(std::size_t n);

// Gale-Ryser criterion for a (0,1)-matrix with the given margins. False for
// negative entries.
bool gale_ryser_feasible(const IntVector& row_sums, const IntVector& col_sums);

// A deterministic (0,1)-matrix with row sums (1,...,n) top to bottom and
// column sums col_sums. Greedy Ryser fill: rows are taken from the largest
// sum down, each placing its ones in the columns with the largest residual
// demand (ties to the smaller index), then stacked in ascending row-sum
// order. Throws NonPositiveEntry or Infeasible.
IntMatrix construct_01_matrix(const IntVector& col_sums);

// Row i goes to row n + 1 - i.
IntMatrix reflect_vertical(const IntMatrix& m);

// Row and column sums of m.
IntVector row_sums(const IntMatrix& m);
IntVector column_sums(const IntMatrix& m);

}  // namespace asmproj
