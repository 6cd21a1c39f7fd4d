#pragma once

// Alternating sign hypermatrices (ASHMs) and their Latin-like squares.
//
// An order-n ASHM is stored as planes P_1..P_n; plane k (1-based) is the
// n x n slice a(., ., k) and carries weight k in L(A) = sum_k k P_k.
// Following the usual line naming, a row line A_{*jk} varies the first
// index, a column line A_{i*k} the second, a vertical line A_{ij*} the plane.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "asmproj/core.hpp"

namespace asmproj {

// planes[k][i][j], all 0-based.
using Hypermatrix = std::vector<std::vector<std::vector<int>>>;

class Ashm {
 public:
  std::size_t order() const noexcept { return n_; }
  int at(std::size_t i, std::size_t j, std::size_t k) const { return entries_[(k * n_ + i) * n_ + j]; }
  IntMatrix plane(std::size_t k) const;
  Hypermatrix planes() const;

  friend bool operator==(const Ashm&, const Ashm&) = default;
  friend bool operator<(const Ashm& lhs, const Ashm& rhs) {
    if (lhs.n_ != rhs.n_) return lhs.n_ < rhs.n_;
    return lhs.entries_ < rhs.entries_;
  }

 private:
  friend Ashm validate_ashm(const Hypermatrix& planes);
  Ashm(std::size_t n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<int> entries_;
};

// Throws BadShape, EntryOutOfRange, or LineNotAlternating naming the line
// type and its two fixed coordinates (1-based).
Ashm validate_ashm(const Hypermatrix& planes);

// L(i,j) = sum_k k * a(i,j,k).
IntMatrix ashl(const Ashm& a);

// First line n, then n lines of n cells. A cell lists the signed plane
// indices of its vertical line in increasing order, e.g. "+1-2+3".
std::string grid_notation(const Ashm& a);
// Accepts the output of grid_notation; a leading '+' on a cell is optional.
Hypermatrix parse_grid_notation(std::string_view text);

// {"n": n, "planes": [plane_1, ..., plane_n]}
nlohmann::json ashm_to_json(const Ashm& a);
Hypermatrix hypermatrix_from_json(const nlohmann::json& doc);
// JSON when the text starts with '{', grid notation otherwise.
Ashm parse_ashm(std::string_view text);

// Every row and column of l is majorized by (n,...,1).
bool check_lines_majorized(const IntMatrix& l);

// Rows 1, n and columns 1, n are permutations of 1..n.
bool check_outer_lines_permutation(const IntMatrix& l);

// Every non-zero count of row or column i (1-based) of every plane is at
// most min(2i - 1, 2(n - i) + 1).
bool plane_line_counts_bounded(const Ashm& a);

// For each row or column of L(A) holding one value k throughout, the cells
// second and second-last along it carry no negative term except -k.
bool constant_lines_have_clean_neighbours(const Ashm& a);

// Ordered triples of 3 x 3 ASMs stacked as planes, kept when every vertical
// line alternates.
std::vector<Ashm> enumerate_ashms_order3();

// Independent oracle: depth-first fill of all n^3 cells with running prefix
// sums of the three line kinds kept in {0,1}.
std::vector<Ashm> enumerate_ashms_cellwise(std::size_t n);

struct OccurrenceProfile {
  std::vector<int> row_max;
  std::vector<int> column_max;
  std::vector<int> line_max;  // max of the two, the empirical m_i
};

OccurrenceProfile occurrence_profile(int value, const std::vector<IntMatrix>& ashls);

}  // namespace asmproj
