#include "asmproj/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "asmproj/galeryser.hpp"

namespace asmproj {

namespace {

void check_limit(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(ErrorKind::LimitExceeded, std::string(what) + " of order " + std::to_string(n) +
                                              " exceeds the limit " + std::to_string(limit));
  }
}

// Running prefix sums of an ASM row or column stay in {0,1}; a row closes
// at 1 and, after the last row, so does every column.
class AsmBacktracker {
 public:
  AsmBacktracker(std::size_t n, const std::function<void(const IntMatrix&)>& visit)
      : n_(n), visit_(visit), entries_(n * n, 0), column_(n, 0) {}

  void run_from(std::size_t first_cell) { fill(first_cell, 0); }

  // Pins row 0 to a single +1 at `col`; every ASM's first row has this form.
  void pin_first_row(std::size_t col) {
    entries_[col] = 1;
    column_[col] = 1;
  }

 private:
  void fill(std::size_t cell, int row_state) {
    if (cell == n_ * n_) {
      for (int c : column_)
        if (c != 1) return;
      IntMatrix m(n_);
      for (std::size_t k = 0; k < entries_.size(); ++k) m(k / n_, k % n_) = entries_[k];
      visit_(m);
      return;
    }
    const std::size_t col = cell % n_;
    const int col_state = column_[col];
    for (int x = -1; x <= 1; ++x) {
      const int next_row = row_state + x;
      const int next_col = col_state + x;
      if (next_row < 0 || next_row > 1 || next_col < 0 || next_col > 1) continue;
      if (col == n_ - 1 && next_row != 1) continue;
      entries_[cell] = x;
      column_[col] = next_col;
      fill(cell + 1, col == n_ - 1 ? 0 : next_row);
      column_[col] = col_state;
      entries_[cell] = 0;
    }
  }

  std::size_t n_;
  const std::function<void(const IntMatrix&)>& visit_;
  std::vector<int> entries_;
  std::vector<int> column_;
};

void extend_upward(std::size_t row, TriangleRows& rows, std::vector<MonotoneTriangle>& out) {
  if (row == 0) {
    out.push_back(validate_monotone(rows));
    return;
  }
  // Row `row - 1` (0-based) has `row` entries between neighbours of row `row`.
  const auto& below = rows[row];
  auto& current = rows[row - 1];
  current.assign(row, 0);
  std::function<void(std::size_t, int)> choose = [&](std::size_t j, int floor) {
    if (j == row) {
      extend_upward(row - 1, rows, out);
      return;
    }
    for (int x = std::max(below[j], floor); x <= below[j + 1]; ++x) {
      current[j] = x;
      choose(j + 1, x + 1);
    }
  };
  choose(0, 1);
}

void subsets(int n, int k, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int x = start; x <= n; ++x) {
    current.push_back(x);
    subsets(n, k, x + 1, current, out);
    current.pop_back();
  }
}

void partitions(int remaining, int parts, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int x = std::min(remaining - (parts - 1), max_part); x >= 1; --x) {
    current.push_back(x);
    partitions(remaining - x, parts - 1, x, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<MonotoneTriangle> enumerate_monotone(std::size_t n, std::size_t limit) {
  check_limit(n, limit, "monotone triangles");
  std::vector<MonotoneTriangle> out;
  if (n == 0) {
    out.push_back(validate_monotone({}));
    return out;
  }
  TriangleRows rows(n);
  for (std::size_t j = 0; j < n; ++j) rows[n - 1].push_back(static_cast<int>(j + 1));
  extend_upward(n - 1, rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_asm_with_first_one(std::size_t n, std::size_t first_one,
                                 const std::function<void(const IntMatrix&)>& visit) {
  AsmBacktracker search(n, visit);
  search.pin_first_row(first_one);
  search.run_from(n);
}

std::vector<Asm> enumerate_asms(std::size_t n, std::size_t limit) {
  check_limit(n, limit, "ASMs");
  std::vector<Asm> out;
  const std::function<void(const IntMatrix&)> collect = [&](const IntMatrix& m) {
    out.push_back(validate_asm(m));
  };
  AsmBacktracker(n, collect).run_from(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_asms(std::size_t n, unsigned jobs, std::size_t limit) {
  check_limit(n, limit, "ASMs");
  if (n == 0) return 1;
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> total{0};
  auto worker = [&] {
    std::size_t local = 0;
    const std::function<void(const IntMatrix&)> tally = [&](const IntMatrix&) { ++local; };
    for (std::size_t col = next++; col < n; col = next++) for_each_asm_with_first_one(n, col, tally);
    total += local;
  };
  std::vector<std::thread> threads;
  for (unsigned k = 1; k < jobs; ++k) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return total.load();
}

std::vector<RowIncreasingTriangle> enumerate_row_increasing(std::size_t n, std::size_t limit) {
  check_limit(n, limit, "row-increasing triangles");
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> scratch;
    subsets(static_cast<int>(n), static_cast<int>(i + 1), 1, scratch, choices[i]);
  }
  std::vector<RowIncreasingTriangle> out;
  TriangleRows rows(n);
  std::function<void(std::size_t)> pick = [&](std::size_t i) {
    if (i == n) {
      out.push_back(validate_row_increasing(rows));
      return;
    }
    for (const auto& c : choices[i]) {
      rows[i] = c;
      pick(i + 1);
    }
  };
  pick(0);
  return out;
}

std::vector<IntVector> enumerate_majorized_vectors(std::size_t n, std::size_t limit) {
  check_limit(n, limit, "majorized vectors");
  const int total = static_cast<int>(n * (n + 1) / 2);
  std::vector<std::vector<int>> parts;
  std::vector<int> scratch;
  partitions(total, static_cast<int>(n), total, scratch, parts);

  const IntVector z = staircase(n);
  std::vector<IntVector> out;
  for (auto p : parts) {
    IntVector as_vector(p.begin(), p.end());
    if (!majorized_by(as_vector, z)) continue;
    std::sort(p.begin(), p.end());
    do {
      out.emplace_back(p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace asmproj
