#include "asmproj/ashm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "asmproj/enumeration.hpp"
#include "asmproj/galeryser.hpp"
#include "asmproj/io.hpp"

namespace asmproj {

namespace {

// Non-zero entries alternate, starting and ending with +1.
bool alternates(const std::vector<int>& line) {
  int running = 0;
  for (int x : line) {
    running += x;
    if (running < 0 || running > 1) return false;
  }
  return running == 1;
}

std::string coords(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

struct Term {
  int sign;
  int plane;
};

std::vector<Term> parse_cell(const std::string& cell, std::size_t n) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < cell.size()) {
    int sign = 1;
    if (cell[pos] == '+' || cell[pos] == '-') {
      sign = cell[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      throw Error(ErrorKind::Parse, "missing sign in grid cell '" + cell + "'");
    }
    const std::size_t start = pos;
    while (pos < cell.size() && std::isdigit(static_cast<unsigned char>(cell[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw Error(ErrorKind::Parse, "bad grid cell '" + cell + "'");
    const int plane = std::stoi(cell.substr(start, pos - start));
    if (plane < 1 || static_cast<std::size_t>(plane) > n) {
      throw Error(ErrorKind::Parse, "plane index out of range in grid cell '" + cell + "'");
    }
    if (!terms.empty() && plane <= terms.back().plane) {
      throw Error(ErrorKind::Parse, "plane indices must increase in grid cell '" + cell + "'");
    }
    terms.push_back({sign, plane});
  }
  if (terms.empty()) throw Error(ErrorKind::Parse, "empty grid cell");
  return terms;
}

class CellwiseSearch {
 public:
  explicit CellwiseSearch(std::size_t n)
      : n_(n), cells_(n * n * n, 0), row_(n * n, 0), col_(n * n, 0), vert_(n * n, 0) {}

  std::vector<Ashm> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  // cell index = (k * n + i) * n + j; row lines vary i, column lines vary j,
  // vertical lines vary k.
  void fill(std::size_t cell) {
    if (cell == cells_.size()) {
      Hypermatrix h(n_, std::vector<std::vector<int>>(n_, std::vector<int>(n_)));
      for (std::size_t c = 0; c < cells_.size(); ++c) h[c / (n_ * n_)][(c / n_) % n_][c % n_] = cells_[c];
      found_.push_back(validate_ashm(h));
      return;
    }
    const std::size_t k = cell / (n_ * n_), i = (cell / n_) % n_, j = cell % n_;
    int& r = row_[k * n_ + j];
    int& c = col_[k * n_ + i];
    int& v = vert_[i * n_ + j];
    for (int x = -1; x <= 1; ++x) {
      const int nr = r + x, nc = c + x, nv = v + x;
      if (nr < 0 || nr > 1 || nc < 0 || nc > 1 || nv < 0 || nv > 1) continue;
      // Lines close at 1 on their last entry.
      if (i == n_ - 1 && nr != 1) continue;
      if (j == n_ - 1 && nc != 1) continue;
      if (k == n_ - 1 && nv != 1) continue;
      r = nr, c = nc, v = nv;
      cells_[cell] = x;
      fill(cell + 1);
      cells_[cell] = 0;
      r -= x, c -= x, v -= x;
    }
  }

  std::size_t n_;
  std::vector<int> cells_;
  std::vector<int> row_, col_, vert_;
  std::vector<Ashm> found_;
};

}  // namespace

IntMatrix Ashm::plane(std::size_t k) const {
  IntMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = at(i, j, k);
  return m;
}

Hypermatrix Ashm::planes() const {
  Hypermatrix h(n_, std::vector<std::vector<int>>(n_, std::vector<int>(n_)));
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) h[k][i][j] = at(i, j, k);
  return h;
}

Ashm validate_ashm(const Hypermatrix& planes) {
  const std::size_t n = planes.size();
  for (const auto& plane : planes) {
    if (plane.size() != n) throw Error(ErrorKind::BadShape, "hypermatrix is not cubical");
    for (const auto& row : plane)
      if (row.size() != n) throw Error(ErrorKind::BadShape, "hypermatrix is not cubical");
  }
  std::vector<int> entries(n * n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const int x = planes[k][i][j];
        if (x < -1 || x > 1) {
          throw Error(ErrorKind::EntryOutOfRange,
                      "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                          std::to_string(k + 1) + ") = " + std::to_string(x));
        }
        entries[(k * n + i) * n + j] = x;
      }
    }
  }
  const auto get = [&](std::size_t i, std::size_t j, std::size_t k) { return planes[k][i][j]; };
  std::vector<int> line(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) line[i] = get(i, j, k);
      if (!alternates(line)) throw Error(ErrorKind::LineNotAlternating, "row line " + coords(j, k));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) line[j] = get(i, j, k);
      if (!alternates(line)) throw Error(ErrorKind::LineNotAlternating, "column line " + coords(i, k));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) line[k] = get(i, j, k);
      if (!alternates(line)) throw Error(ErrorKind::LineNotAlternating, "vertical line " + coords(i, j));
    }

  Ashm a(n, std::move(entries));
  for (std::size_t k = 0; k < n; ++k) {
    try {
      validate_asm(a.plane(k));
    } catch (const Error& e) {
      throw Error(ErrorKind::Internal, "plane " + std::to_string(k + 1) + " is not an ASM: " + e.what());
    }
  }
  return a;
}

IntMatrix ashl(const Ashm& a) {
  const std::size_t n = a.order();
  IntMatrix l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) l(i, j) += static_cast<long long>(k + 1) * a.at(i, j, k);
  return l;
}

std::string grid_notation(const Ashm& a) {
  const std::size_t n = a.order();
  std::ostringstream out;
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      for (std::size_t k = 0; k < n; ++k) {
        const int x = a.at(i, j, k);
        if (x != 0) out << (x > 0 ? '+' : '-') << (k + 1);
      }
    }
    out << '\n';
  }
  return out.str();
}

Hypermatrix parse_grid_notation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::string> cells;
    for (std::string w; words >> w;) cells.push_back(w);
    if (!cells.empty()) rows.push_back(std::move(cells));
  }
  if (rows.empty() || rows[0].size() != 1) throw Error(ErrorKind::Parse, "grid must start with n");
  const Integer n_value = parse_integer(rows[0][0]);
  if (n_value < 0 || n_value > 256) throw Error(ErrorKind::Parse, "grid order out of range");
  const std::size_t n = n_value.convert_to<std::size_t>();
  if (rows.size() != n + 1) throw Error(ErrorKind::Parse, "grid must have n rows");

  Hypermatrix h(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i + 1].size() != n) throw Error(ErrorKind::Parse, "grid row " + std::to_string(i + 1) + " must have n cells");
    for (std::size_t j = 0; j < n; ++j)
      for (const Term& t : parse_cell(rows[i + 1][j], n)) h[static_cast<std::size_t>(t.plane - 1)][i][j] = t.sign;
  }
  return h;
}

nlohmann::json ashm_to_json(const Ashm& a) {
  return {{"n", a.order()}, {"planes", a.planes()}};
}

Hypermatrix hypermatrix_from_json(const nlohmann::json& doc) {
  try {
    const std::size_t n = doc.at("n").get<std::size_t>();
    Hypermatrix h = doc.at("planes").get<Hypermatrix>();
    if (h.size() != n) throw Error(ErrorKind::BadShape, "\"planes\" must hold n planes");
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Ashm parse_ashm(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return validate_ashm(hypermatrix_from_json(nlohmann::json::parse(text)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }
  return validate_ashm(parse_grid_notation(text));
}

bool check_lines_majorized(const IntMatrix& l) {
  const IntVector z = staircase(l.order());
  for (std::size_t k = 0; k < l.order(); ++k) {
    if (!majorized_by(l.row(k), z) || !majorized_by(l.column(k), z)) return false;
  }
  return true;
}

bool check_outer_lines_permutation(const IntMatrix& l) {
  const std::size_t n = l.order();
  if (n == 0) return true;
  IntVector expected(n);
  for (std::size_t k = 0; k < n; ++k) expected[k] = static_cast<unsigned long long>(k + 1);
  for (IntVector line : {l.row(0), l.row(n - 1), l.column(0), l.column(n - 1)}) {
    std::sort(line.begin(), line.end());
    if (line != expected) return false;
  }
  return true;
}

bool plane_line_counts_bounded(const Ashm& a) {
  const std::size_t n = a.order();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t line = 0; line < n; ++line) {
      const std::size_t bound = std::min(2 * line + 1, 2 * (n - 1 - line) + 1);
      std::size_t row_count = 0, col_count = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (a.at(line, x, k) != 0) ++row_count;
        if (a.at(x, line, k) != 0) ++col_count;
      }
      if (row_count > bound || col_count > bound) return false;
    }
  }
  return true;
}

bool constant_lines_have_clean_neighbours(const Ashm& a) {
  const std::size_t n = a.order();
  if (n < 2) return true;
  const IntMatrix l = ashl(a);
  const auto clean = [&](std::size_t i, std::size_t j, long long value) {
    for (std::size_t k = 0; k < n; ++k)
      if (a.at(i, j, k) < 0 && static_cast<long long>(k + 1) != value) return false;
    return true;
  };
  for (std::size_t line = 0; line < n; ++line) {
    const IntVector column = l.column(line);
    if (std::all_of(column.begin(), column.end(), [&](const Integer& x) { return x == column[0]; })) {
      const long long value = column[0].convert_to<long long>();
      if (!clean(1, line, value) || !clean(n - 2, line, value)) return false;
    }
    const IntVector row = l.row(line);
    if (std::all_of(row.begin(), row.end(), [&](const Integer& x) { return x == row[0]; })) {
      const long long value = row[0].convert_to<long long>();
      if (!clean(line, 1, value) || !clean(line, n - 2, value)) return false;
    }
  }
  return true;
}

std::vector<Ashm> enumerate_ashms_order3() {
  constexpr std::size_t n = 3;
  const auto asms = enumerate_asms(n);
  std::vector<Ashm> out;
  for (const auto& p1 : asms) {
    for (const auto& p2 : asms) {
      for (const auto& p3 : asms) {
        const Asm* stack[] = {&p1, &p2, &p3};
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          for (std::size_t j = 0; j < n && ok; ++j) {
            ok = alternates({p1.at(i, j), p2.at(i, j), p3.at(i, j)});
          }
        }
        if (!ok) continue;
        Hypermatrix h;
        for (const Asm* p : stack) {
          h.emplace_back();
          for (std::size_t i = 0; i < n; ++i) {
            h.back().emplace_back();
            for (std::size_t j = 0; j < n; ++j) h.back().back().push_back(p->at(i, j));
          }
        }
        out.push_back(validate_ashm(h));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ashm> enumerate_ashms_cellwise(std::size_t n) {
  auto found = CellwiseSearch(n).run();
  std::sort(found.begin(), found.end());
  return found;
}

OccurrenceProfile occurrence_profile(int value, const std::vector<IntMatrix>& ashls) {
  OccurrenceProfile profile;
  if (ashls.empty()) return profile;
  const std::size_t n = ashls.front().order();
  profile.row_max.assign(n, 0);
  profile.column_max.assign(n, 0);
  profile.line_max.assign(n, 0);
  for (const auto& l : ashls) {
    if (l.order() != n) throw Error(ErrorKind::OrderMismatch, "ASHLs of different orders");
    for (std::size_t line = 0; line < n; ++line) {
      int in_row = 0, in_col = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (l(line, x) == value) ++in_row;
        if (l(x, line) == value) ++in_col;
      }
      profile.row_max[line] = std::max(profile.row_max[line], in_row);
      profile.column_max[line] = std::max(profile.column_max[line], in_col);
      profile.line_max[line] = std::max({profile.line_max[line], in_row, in_col});
    }
  }
  return profile;
}

}  // namespace asmproj
