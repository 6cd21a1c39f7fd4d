#include "asmproj/monotonize.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "asmproj/io.hpp"

namespace asmproj {

namespace {

int value_at(const TriangleRows& rows, Cell c) {
  return rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
}

// The single inversion inside the sub-triangle with bottom row i and apex
// column j (1-based), if any.
std::optional<Inversion> subtriangle_inversion(const TriangleRows& rows, int i, int j) {
  const Cell apex{i - 1, j};
  const Cell left{i, j};
  const Cell right{i, j + 1};
  const int top = value_at(rows, apex);
  const int bottom_left = value_at(rows, left);
  const int bottom_right = value_at(rows, right);
  if (bottom_left > top) return Inversion{left, InversionDirection::Upward, bottom_left, top};
  if (top > bottom_right) return Inversion{apex, InversionDirection::Downward, top, bottom_right};
  return std::nullopt;
}

std::string describe(const InvertedTrapezoid& z) {
  return "trapezoid rows " + std::to_string(z.top_row) + "," + std::to_string(z.bottom_row) +
         " apexes " + std::to_string(z.first_apex) + ".." + std::to_string(z.last_apex);
}

void check_shape(const TriangleRows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i + 1) {
      throw Error(ErrorKind::BadShape, "row " + std::to_string(i + 1) + " has " +
                                           std::to_string(rows[i].size()) + " entries");
    }
  }
}

// Both steps strictly increase col * (n + 1) - row, so visiting cells in
// decreasing key order sees every successor first.
std::vector<Cell> cells_by_descending_key(int n) {
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) cells.push_back({i, j});
  const auto key = [n](Cell c) { return c.col * (n + 1) - c.row; };
  std::sort(cells.begin(), cells.end(), [&](Cell a, Cell b) { return key(a) > key(b); });
  return cells;
}

}  // namespace

std::vector<Inversion> find_inversions(const RowIncreasingTriangle& t) {
  const auto& rows = t.rows();
  const int n = static_cast<int>(t.order());
  std::vector<Inversion> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      const int b = value_at(rows, {i, j});
      if (j <= i - 1) {
        const int a = value_at(rows, {i - 1, j});
        if (b > a) out.push_back({{i, j}, InversionDirection::Upward, b, a});
      }
      if (i < n) {
        const int a = value_at(rows, {i + 1, j + 1});
        if (b > a) out.push_back({{i, j}, InversionDirection::Downward, b, a});
      }
    }
  }
  return out;
}

std::size_t potential_f(const RowIncreasingTriangle& t) { return potential_f(t.rows()); }

std::size_t potential_f(const TriangleRows& rows) {
  check_shape(rows);
  const int n = static_cast<int>(rows.size());
  const std::vector<Cell> cells = cells_by_descending_key(n);

  // min_after[i][j]: smallest value reachable from (i,j) in at least one step.
  std::vector<std::vector<int>> min_after(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) min_after[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(i), INT_MAX);
  const auto slot = [&](Cell c) -> int& {
    return min_after[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  };

  std::size_t count = 0;
  for (Cell c : cells) {
    int best = INT_MAX;
    const Cell ne{c.row - 1, c.col};
    const Cell se{c.row + 1, c.col + 1};
    if (ne.row >= 1 && ne.col <= ne.row) best = std::min({best, value_at(rows, ne), slot(ne)});
    if (se.row <= n) best = std::min({best, value_at(rows, se), slot(se)});
    slot(c) = best;
    if (best < value_at(rows, c)) ++count;
  }
  return count;
}

std::size_t inversion_pairs(const RowIncreasingTriangle& t) { return inversion_pairs(t.rows()); }

std::size_t inversion_pairs(const TriangleRows& rows) {
  check_shape(rows);
  const int n = static_cast<int>(rows.size());
  const auto index = [](Cell c) { return static_cast<std::size_t>(c.row * (c.row - 1) / 2 + c.col - 1); };
  const std::size_t size = rows.size() * (rows.size() + 1) / 2;
  std::vector<std::vector<char>> reach(size, std::vector<char>(size, 0));
  std::size_t count = 0;
  for (Cell c : cells_by_descending_key(n)) {
    auto& mine = reach[index(c)];
    for (Cell next : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col + 1}}) {
      if (next.row < 1 || next.row > n || next.col > next.row) continue;
      mine[index(next)] = 1;
      const auto& theirs = reach[index(next)];
      for (std::size_t k = 0; k < size; ++k) mine[k] |= theirs[k];
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j)
        if (mine[index({i, j})] && value_at(rows, {i, j}) < value_at(rows, c)) ++count;
  }
  return count;
}

std::vector<InvertedTrapezoid> find_inverted_trapezoids(const RowIncreasingTriangle& t) {
  const auto& rows = t.rows();
  const int n = static_cast<int>(t.order());
  std::vector<InvertedTrapezoid> out;
  for (int i = 2; i <= n; ++i) {
    std::optional<InvertedTrapezoid> open;
    for (int j = 1; j <= i - 1; ++j) {
      auto inv = subtriangle_inversion(rows, i, j);
      if (!inv) {
        if (open) out.push_back(std::move(*open)), open.reset();
        continue;
      }
      if (!open) open = InvertedTrapezoid{i - 1, i, j, j, n - i, {}};
      open->last_apex = j;
      open->inversions.push_back(*inv);
    }
    if (open) out.push_back(std::move(*open));
  }

  for (const auto& z : out) {
    std::vector<Cell> used;
    for (const auto& inv : z.inversions) {
      used.push_back(inv.at);
      used.push_back(inv.partner());
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
      throw Error(ErrorKind::Internal, describe(z) + " has an entry in two inversions");
    }
  }
  return out;
}

RowIncreasingTriangle switch_trapezoid(const RowIncreasingTriangle& t, const InvertedTrapezoid& z) {
  const auto current = find_inverted_trapezoids(t);
  if (std::find(current.begin(), current.end(), z) == current.end()) {
    throw Error(ErrorKind::StaleTrapezoid, describe(z) + " does not match the triangle");
  }

  TriangleRows rows = t.rows();
  for (const auto& inv : z.inversions) {
    const Cell a = inv.at;
    const Cell b = inv.partner();
    std::swap(rows[static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)],
              rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)]);
  }

  RowIncreasingTriangle switched = [&] {
    try {
      return validate_row_increasing(rows);
    } catch (const Error& e) {
      throw Error(ErrorKind::Internal, "switching " + describe(z) + " broke row order: " + e.what());
    }
  }();
  if (inversion_pairs(switched) >= inversion_pairs(t)) {
    throw Error(ErrorKind::Internal, "switching " + describe(z) + " did not decrease the inversion pairs");
  }
  return switched;
}

MonotonizeResult monotonize(const RowIncreasingTriangle& t, bool trace, SwitchOrder order) {
  const std::size_t f_initial = potential_f(t);
  const std::size_t pairs_initial = inversion_pairs(t);
  RowIncreasingTriangle current = t;
  std::vector<SwitchRecord> records;
  std::size_t switches = 0;

  while (true) {
    auto trapezoids = find_inverted_trapezoids(current);
    if (trapezoids.empty()) break;
    // Trapezoids come out top to bottom, left to right within a row pair.
    const InvertedTrapezoid* chosen = &trapezoids.front();
    if (order == SwitchOrder::BottomUp) {
      for (const auto& z : trapezoids)
        if (z.bottom_row > chosen->bottom_row) chosen = &z;
    }
    current = switch_trapezoid(current, *chosen);
    ++switches;
    if (switches > pairs_initial) {
      throw Error(ErrorKind::Internal, "more switches than initial inversion pairs");
    }
    if (trace) records.push_back({*chosen, current, potential_f(current)});
  }

  if (potential_f(current) != 0) {
    throw Error(ErrorKind::Internal, "no trapezoids left but f > 0");
  }
  MonotoneTriangle result = [&] {
    try {
      return validate_monotone(current.rows());
    } catch (const Error& e) {
      throw Error(ErrorKind::Internal, std::string("fixed point is not monotone: ") + e.what());
    }
  }();
  if (entry_multiset(result) != entry_multiset(t)) {
    throw Error(ErrorKind::Internal, "switching changed the entry multiset");
  }
  return {std::move(result), f_initial, pairs_initial, switches, std::move(records)};
}

std::string format_trace(const RowIncreasingTriangle& initial, const std::vector<SwitchRecord>& trace) {
  std::ostringstream out;
  out << format_triangle(initial);
  for (const auto& step : trace) {
    out << "-- switch height=" << step.trapezoid.height << " rows=" << step.trapezoid.top_row << ','
        << step.trapezoid.bottom_row << " f=" << step.f_after << '\n';
    out << format_triangle(step.after);
  }
  return out.str();
}

}  // namespace asmproj
