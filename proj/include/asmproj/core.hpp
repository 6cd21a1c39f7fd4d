#pragma once

// Shared domain types: integer matrices and vectors, alternating sign
// matrices, partial sum matrices, and the two triangle kinds.
//
// Indexing convention: container accessors (IntMatrix::operator(),
// triangle at()) are 0-based. Domain records that name positions
// (inversions, trapezoids, T-blocks) and every error message, file format,
// and printed trace are 1-based.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asmproj/error.hpp"

namespace asmproj {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;
using TriangleRows = std::vector<std::vector<int>>;

IntVector make_vector(std::initializer_list<long long> values);

// Square matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order);

  // Throws NotSquare unless every row has rows.size() entries.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_ints(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t order() const noexcept { return order_; }

  const Integer& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }
  Integer& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }

  IntVector row(std::size_t row) const;
  IntVector column(std::size_t col) const;

  IntMatrix transpose() const;
  // Quarter turn clockwise; with transpose this generates the dihedral
  // action, so horizontal projections are weighted_projection(transpose()).
  IntMatrix rotate() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) { return lhs -= rhs; }
  friend IntMatrix operator*(const Integer& scalar, IntMatrix m) { return m *= scalar; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator<(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.order_ != rhs.order_) return lhs.order_ < rhs.order_;
    return lhs.entries_ < rhs.entries_;
  }

 private:
  void require_same_order(const IntMatrix& other) const;

  std::size_t order_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix identity_matrix(std::size_t order);

// A validated alternating sign matrix. Only validate_asm constructs one.
class Asm {
 public:
  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t order() const noexcept { return matrix_.order(); }
  int at(std::size_t row, std::size_t col) const { return matrix_(row, col).convert_to<int>(); }

  friend bool operator==(const Asm&, const Asm&) = default;
  friend bool operator<(const Asm& lhs, const Asm& rhs) { return lhs.matrix_ < rhs.matrix_; }

 private:
  friend Asm validate_asm(const IntMatrix& m);
  explicit Asm(IntMatrix m) : matrix_(std::move(m)) {}

  IntMatrix matrix_;
};

// A (0,1)-matrix whose row i (1-based) has exactly i ones. Produced from an
// Asm by column prefix sums, or checked from a raw matrix.
class PartialSumMatrix {
 public:
  // Throws EntryOutOfRange for non-(0,1) entries, BadRowSums otherwise.
  static PartialSumMatrix from_matrix(const IntMatrix& m);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t order() const noexcept { return matrix_.order(); }

  friend bool operator==(const PartialSumMatrix&, const PartialSumMatrix&) = default;

 private:
  explicit PartialSumMatrix(IntMatrix m) : matrix_(std::move(m)) {}

  IntMatrix matrix_;
};

// Triangle of order n: row i (0-based) holds i + 1 entries from 1..n, each
// row strictly increasing.
class RowIncreasingTriangle {
 public:
  std::size_t order() const noexcept { return rows_.size(); }
  int at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const TriangleRows& rows() const noexcept { return rows_; }

  friend bool operator==(const RowIncreasingTriangle&, const RowIncreasingTriangle&) = default;
  friend bool operator<(const RowIncreasingTriangle& lhs, const RowIncreasingTriangle& rhs) {
    return lhs.rows_ < rhs.rows_;
  }

 private:
  friend RowIncreasingTriangle validate_row_increasing(const TriangleRows& rows);
  explicit RowIncreasingTriangle(TriangleRows rows) : rows_(std::move(rows)) {}

  TriangleRows rows_;
};

// Row-increasing triangle that also interlaces:
// t(i+1,j) <= t(i,j) <= t(i+1,j+1).
class MonotoneTriangle {
 public:
  std::size_t order() const noexcept { return base_.order(); }
  int at(std::size_t row, std::size_t col) const { return base_.at(row, col); }
  const TriangleRows& rows() const noexcept { return base_.rows(); }
  const RowIncreasingTriangle& as_row_increasing() const noexcept { return base_; }

  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
  friend bool operator<(const MonotoneTriangle& lhs, const MonotoneTriangle& rhs) {
    return lhs.base_ < rhs.base_;
  }

 private:
  friend MonotoneTriangle validate_monotone(const TriangleRows& rows);
  explicit MonotoneTriangle(RowIncreasingTriangle base) : base_(std::move(base)) {}

  RowIncreasingTriangle base_;
};

Asm validate_asm(const IntMatrix& m);
MonotoneTriangle validate_monotone(const TriangleRows& rows);
RowIncreasingTriangle validate_row_increasing(const TriangleRows& rows);

// v_j = sum_i (n + 1 - i) * m(i, j), 1-based. Defined for any square matrix.
IntVector weighted_projection(const IntMatrix& m);
inline IntVector weighted_projection(const Asm& a) { return weighted_projection(a.matrix()); }

// k-th entry counts the occurrences of k + 1 in the triangle.
IntVector entry_multiset(const RowIncreasingTriangle& t);
inline IntVector entry_multiset(const MonotoneTriangle& t) {
  return entry_multiset(t.as_row_increasing());
}

RowIncreasingTriangle identity_triangle(std::size_t order);

// Staircase (1)/(1,2)/.../(1..n), the monotone triangle of the identity.
MonotoneTriangle identity_monotone(std::size_t order);

}  // namespace asmproj
