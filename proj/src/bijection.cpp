#include "asmproj/bijection.hpp"

#include <string>

namespace asmproj {

PartialSumMatrix partial_sum(const Asm& a) {
  const std::size_t n = a.order();
  IntMatrix p(n);
  for (std::size_t j = 0; j < n; ++j) {
    Integer running = 0;
    for (std::size_t i = 0; i < n; ++i) {
      running += a.matrix()(i, j);
      p(i, j) = running;
    }
  }
  return PartialSumMatrix::from_matrix(p);
}

Asm asm_from_partial_sum(const PartialSumMatrix& p) {
  const std::size_t n = p.order();
  IntMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = p.matrix()(i, j);
      if (i > 0) d(i, j) -= p.matrix()(i - 1, j);
    }
  }
  try {
    return validate_asm(d);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAnAsm, std::string("row differences: ") + e.what());
  }
}

RowIncreasingTriangle triangle_from_01(const IntMatrix& m) {
  const std::size_t n = m.order();
  TriangleRows rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == 1) {
        rows[i].push_back(static_cast<int>(j + 1));
      } else if (m(i, j) != 0) {
        throw Error(ErrorKind::EntryOutOfRange, "entry (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ") is not 0 or 1");
      }
    }
    if (rows[i].size() != i + 1) {
      throw Error(ErrorKind::BadRowSums, "row " + std::to_string(i + 1) + " has " +
                                             std::to_string(rows[i].size()) + " ones, expected " +
                                             std::to_string(i + 1));
    }
  }
  return validate_row_increasing(rows);
}

IntMatrix matrix01_from_triangle(const RowIncreasingTriangle& t) {
  IntMatrix m(t.order());
  for (std::size_t i = 0; i < t.order(); ++i)
    for (int col : t.rows()[i]) m(i, static_cast<std::size_t>(col - 1)) = 1;
  return m;
}

MonotoneTriangle monotone_from_asm(const Asm& a) {
  const RowIncreasingTriangle t = triangle_from_01(partial_sum(a).matrix());
  try {
    return validate_monotone(t.rows());
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("partial sums of an ASM not monotone: ") + e.what());
  }
}

Asm asm_from_monotone(const MonotoneTriangle& t) {
  const IntMatrix m = matrix01_from_triangle(t.as_row_increasing());
  try {
    return asm_from_partial_sum(PartialSumMatrix::from_matrix(m));
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("monotone triangle did not yield an ASM: ") + e.what());
  }
}

}  // namespace asmproj
