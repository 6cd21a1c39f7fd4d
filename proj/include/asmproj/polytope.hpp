#pragma once

// Exact-rational members of the ASM polytope and their T-block
// decompositions.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "asmproj/core.hpp"

namespace asmproj {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t order);
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t order() const noexcept { return order_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }

  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  friend RationalMatrix operator+(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs += rhs; }
  friend RationalMatrix operator-(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs -= rhs; }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void require_same_order(const RationalMatrix& other) const;

  std::size_t order_ = 0;
  std::vector<Rational> entries_;
};

// Line sums 1 and every prefix and suffix sum of every line non-negative.
class PolytopeMatrix {
 public:
  const RationalMatrix& matrix() const noexcept { return matrix_; }
  std::size_t order() const noexcept { return matrix_.order(); }

 private:
  friend PolytopeMatrix validate_polytope(const RationalMatrix& m);
  explicit PolytopeMatrix(RationalMatrix m) : matrix_(std::move(m)) {}

  RationalMatrix matrix_;
};

// Throws LineSumNotOne or NegativePartialSum, naming the line and the prefix
// (or suffix) length.
PolytopeMatrix validate_polytope(const RationalMatrix& m);

RationalVector weighted_projection(const RationalMatrix& m);

// sign * T_{i1,j1 : i2,j2}: +1 at (i1,j1) and (i2,j2), -1 at (i2,j1) and
// (i1,j2) for sign +1. Corners are 1-based with i1 < i2, j1 < j2.
struct TBlock {
  int i1 = 0;
  int j1 = 0;
  int i2 = 0;
  int j2 = 0;
  int sign = 1;

  // i2 - i1 for a positive block, i1 - i2 for a negative one.
  int depth() const { return sign * (i2 - i1); }
  TBlock negated() const { return {i1, j1, i2, j2, -sign}; }
  friend bool operator==(const TBlock&, const TBlock&) = default;
};

// The block whose +1 entries sit at (r1,c1), (r2,c2) and -1 entries at
// (r2,c1), (r1,c2), for any distinct rows and distinct columns.
TBlock block_through(int r1, int c1, int r2, int c2);

// Throws CornerOutOfRange for corners outside 1..n or not strictly ordered.
IntMatrix tblock_matrix(const TBlock& b, std::size_t n);

struct TBlockTerm {
  Rational coefficient;
  TBlock block;
  std::optional<TBlock> partner;  // set for opposite-depth pairs
};

// Row-major scan of D = b - a: at the first non-zero (i,j), pair it with the
// first opposite-sign entry right of it in row i and below it in column j.
// Result satisfies b = a + sum c_k T_k, with at most n^2 terms.
std::vector<TBlockTerm> decompose_tblocks(const PolytopeMatrix& a, const PolytopeMatrix& b);

// Column-major scan for equal-projection pairs; every term carries two
// blocks of opposite depth. Throws ProjectionMismatch when v(a) != v(b).
std::vector<TBlockTerm> decompose_paired(const PolytopeMatrix& a, const PolytopeMatrix& b);

// a + sum c_k (T_k [+ S_k]). The result need not lie in the polytope.
RationalMatrix apply_terms(const RationalMatrix& a, const std::vector<TBlockTerm>& terms);

std::string format_rational(const Rational& q);  // "p/q", or "p" when q = 1
Rational parse_rational(std::string_view token);

// "c  T(i1,j1;i2,j2,s)" with "  S(i1,j1;i2,j2,s)" appended for pairs; c is
// always written as p/q.
std::string format_term(const TBlockTerm& term);
std::string format_terms(const std::vector<TBlockTerm>& terms);

// {"n": n, "rows": [["p/q" | "p" | integer, ...], ...]}
RationalMatrix rational_matrix_from_json(const nlohmann::json& doc);
RationalMatrix parse_rational_matrix(std::string_view text);
nlohmann::json rational_matrix_to_json(const RationalMatrix& m);

}  // namespace asmproj
