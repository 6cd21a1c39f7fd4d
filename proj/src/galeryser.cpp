#include "asmproj/galeryser.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "asmproj/io.hpp"

namespace asmproj {

IntVector conjugate(const IntVector& x, std::size_t length) {
  for (const auto& v : x) {
    if (v < 0) throw Error(ErrorKind::NegativeEntry, "conjugate of " + format_vector(x));
  }
  IntVector result(length);
  for (std::size_t k = 1; k <= length; ++k) {
    const Integer threshold = static_cast<unsigned long long>(k);
    for (const auto& v : x)
      if (v >= threshold) result[k - 1] += 1;
  }
  return result;
}

bool majorized_by(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  IntVector xs = x, ys = y;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  Integer px = 0, py = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py) return false;
  }
  return px == py;
}

IntVector staircase(std::size_t n) {
  IntVector z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = static_cast<unsigned long long>(n - k);
  return z;
}

bool gale_ryser_feasible(const IntVector& rows, const IntVector& cols) {
  for (const auto& v : rows)
    if (v < 0) return false;
  for (const auto& v : cols)
    if (v < 0) return false;
  const Integer row_total = std::accumulate(rows.begin(), rows.end(), Integer(0));
  const Integer col_total = std::accumulate(cols.begin(), cols.end(), Integer(0));
  if (row_total != col_total) return false;
  return majorized_by(cols, conjugate(rows, cols.size()));
}

IntMatrix construct_01_matrix(const IntVector& col_sums) {
  const std::size_t n = col_sums.size();
  for (const auto& v : col_sums) {
    if (v <= 0) throw Error(ErrorKind::NonPositiveEntry, format_vector(col_sums));
  }
  if (!majorized_by(col_sums, staircase(n))) {
    throw Error(ErrorKind::Infeasible, format_vector(col_sums) + " is not majorized by " +
                                           format_vector(staircase(n)));
  }

  IntVector residual = col_sums;
  IntMatrix m(n);
  std::vector<std::size_t> order(n);
  for (std::size_t row_sum = n; row_sum >= 1; --row_sum) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return residual[a] > residual[b];
    });
    for (std::size_t k = 0; k < row_sum; ++k) {
      const std::size_t col = order[k];
      if (residual[col] <= 0) {
        throw Error(ErrorKind::Internal, "greedy fill ran out of demand for " + format_vector(col_sums));
      }
      residual[col] -= 1;
      m(row_sum - 1, col) = 1;
    }
  }

  IntVector ascending = staircase(n);
  std::reverse(ascending.begin(), ascending.end());
  if (row_sums(m) != ascending || column_sums(m) != col_sums) {
    throw Error(ErrorKind::Internal, "greedy fill produced wrong margins for " + format_vector(col_sums));
  }
  return m;
}

IntMatrix reflect_vertical(const IntMatrix& m) {
  const std::size_t n = m.order();
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(n - 1 - i, j) = m(i, j);
  return r;
}

IntVector row_sums(const IntMatrix& m) {
  IntVector s(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) s[i] += m(i, j);
  return s;
}

IntVector column_sums(const IntMatrix& m) {
  IntVector s(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) s[j] += m(i, j);
  return s;
}

}  // namespace asmproj
