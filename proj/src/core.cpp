#include "asmproj/core.hpp"

#include <string>

namespace asmproj {

namespace {

std::string line_name(bool is_row, std::size_t index) {
  return std::string(is_row ? "row " : "column ") + std::to_string(index + 1);
}

// Sum first, so a doubled +1 reads as a sum failure rather than an
// alternation failure.
void check_line(const IntVector& line, bool is_row, std::size_t index) {
  Integer sum = 0;
  for (const auto& x : line) sum += x;
  if (sum != 1) {
    throw Error(ErrorKind::LineSumNotOne,
                line_name(is_row, index) + " sums to " + sum.str());
  }
  int previous = 0;
  for (const auto& x : line) {
    if (x == 0) continue;
    const int sign = x > 0 ? 1 : -1;
    if (sign == previous) {
      throw Error(ErrorKind::LineNotAlternating, line_name(is_row, index));
    }
    previous = sign;
  }
}

void check_shape(const TriangleRows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i + 1) {
      throw Error(ErrorKind::BadShape, "row " + std::to_string(i + 1) + " has " +
                                           std::to_string(rows[i].size()) + " entries, expected " +
                                           std::to_string(i + 1));
    }
  }
}

void check_strict_rows(const TriangleRows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j + 1 < rows[i].size(); ++j) {
      if (rows[i][j] >= rows[i][j + 1]) {
        throw Error(ErrorKind::RowNotStrict, "row " + std::to_string(i + 1));
      }
    }
  }
}

void check_value_range(const TriangleRows& rows) {
  const int n = static_cast<int>(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1 || rows[i][j] > n) {
        throw Error(ErrorKind::ValueOutOfRange,
                    "t(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                        std::to_string(rows[i][j]) + " not in 1.." + std::to_string(n));
      }
    }
  }
}

}  // namespace

IntVector make_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

IntMatrix::IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) + " entries in a " +
                                            std::to_string(rows.size()) + "-row matrix");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Integer>> converted;
  for (const auto& r : rows) {
    converted.emplace_back();
    for (long long x : r) converted.back().emplace_back(x);
  }
  return from_rows(converted);
}

IntVector IntMatrix::row(std::size_t row) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(row * order_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((row + 1) * order_));
}

IntVector IntMatrix::column(std::size_t col) const {
  IntVector out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back((*this)(i, col));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::rotate() const {
  IntMatrix r(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) r(j, order_ - 1 - i) = (*this)(i, j);
  return r;
}

void IntMatrix::require_same_order(const IntMatrix& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorKind::OrderMismatch,
                std::to_string(order_) + " vs " + std::to_string(other.order_));
  }
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

IntMatrix identity_matrix(std::size_t order) {
  IntMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

Asm validate_asm(const IntMatrix& m) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < -1 || m(i, j) > 1) {
        throw Error(ErrorKind::EntryOutOfRange, "entry (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ") = " +
                                                    m(i, j).str());
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) check_line(m.row(i), true, i);
  for (std::size_t j = 0; j < n; ++j) check_line(m.column(j), false, j);
  return Asm(m);
}

PartialSumMatrix PartialSumMatrix::from_matrix(const IntMatrix& m) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) {
        throw Error(ErrorKind::EntryOutOfRange, "entry (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ") is not 0 or 1");
      }
      if (m(i, j) == 1) ++ones;
    }
    if (ones != i + 1) {
      throw Error(ErrorKind::BadRowSums, "row " + std::to_string(i + 1) + " has " +
                                             std::to_string(ones) + " ones, expected " +
                                             std::to_string(i + 1));
    }
  }
  return PartialSumMatrix(m);
}

RowIncreasingTriangle validate_row_increasing(const TriangleRows& rows) {
  check_shape(rows);
  check_strict_rows(rows);
  check_value_range(rows);
  return RowIncreasingTriangle(rows);
}

MonotoneTriangle validate_monotone(const TriangleRows& rows) {
  RowIncreasingTriangle base = validate_row_increasing(rows);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const int upper = rows[i][j];
      if (rows[i + 1][j] > upper || upper > rows[i + 1][j + 1]) {
        throw Error(ErrorKind::InterlacingViolated,
                    "t(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                        std::to_string(upper) + " against row " + std::to_string(i + 2) +
                        " entries " + std::to_string(rows[i + 1][j]) + "," +
                        std::to_string(rows[i + 1][j + 1]));
      }
    }
  }
  return MonotoneTriangle(std::move(base));
}

IntVector weighted_projection(const IntMatrix& m) {
  const std::size_t n = m.order();
  IntVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer weight = static_cast<unsigned long long>(n - i);
    for (std::size_t j = 0; j < n; ++j) v[j] += weight * m(i, j);
  }
  return v;
}

IntVector entry_multiset(const RowIncreasingTriangle& t) {
  IntVector counts(t.order());
  for (const auto& row : t.rows())
    for (int x : row) counts[static_cast<std::size_t>(x - 1)] += 1;
  return counts;
}

RowIncreasingTriangle identity_triangle(std::size_t order) {
  return identity_monotone(order).as_row_increasing();
}

MonotoneTriangle identity_monotone(std::size_t order) {
  TriangleRows rows(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j <= i; ++j) rows[i].push_back(static_cast<int>(j + 1));
  return validate_monotone(rows);
}

}  // namespace asmproj
