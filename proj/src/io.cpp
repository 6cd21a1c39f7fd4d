#include "asmproj/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace asmproj {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

// Non-blank lines, each split into tokens.
std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = split_ws(text.substr(start, end - start));
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    start = end + 1;
  }
  return lines;
}

std::size_t parse_order(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty input");
  if (lines[0].size() != 1) throw Error(ErrorKind::Parse, "first line must hold only the order n");
  const Integer n = parse_integer(lines[0][0]);
  if (n < 0 || n > 4096) throw Error(ErrorKind::Parse, "order out of range: " + n.str());
  return n.convert_to<std::size_t>();
}

nlohmann::json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

}  // namespace

Integer parse_integer(std::string_view token) {
  if (token == "+") return 1;
  if (token == "-") return -1;
  std::size_t pos = 0;
  if (!token.empty() && (token[0] == '-' || token[0] == '+')) pos = 1;
  if (pos == token.size()) throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(token) + "'");
  for (std::size_t k = pos; k < token.size(); ++k) {
    if (token[k] < '0' || token[k] > '9') {
      throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(token) + "'");
    }
  }
  Integer value(std::string(token.substr(pos)));
  return token[0] == '-' ? Integer(-value) : value;
}

IntMatrix parse_matrix(std::string_view text) {
  const auto lines = tokenized_lines(text);
  const std::size_t n = parse_order(lines);
  if (lines.size() != n + 1) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " matrix rows, found " +
                                      std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 1; i <= n; ++i) {
    rows.emplace_back();
    for (const auto& token : lines[i]) rows.back().push_back(parse_integer(token));
  }
  return IntMatrix::from_rows(rows);
}

IntMatrix read_matrix(std::istream& in) { return parse_matrix(read_all(in)); }

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

TriangleRows parse_triangle(std::string_view text) {
  const auto lines = tokenized_lines(text);
  const std::size_t n = parse_order(lines);
  if (lines.size() != n + 1) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " triangle rows, found " +
                                      std::to_string(lines.size() - 1));
  }
  TriangleRows rows;
  for (std::size_t i = 1; i <= n; ++i) {
    rows.emplace_back();
    for (const auto& token : lines[i]) {
      const Integer x = parse_integer(token);
      if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw Error(ErrorKind::Parse, "triangle entry out of range: " + x.str());
      }
      rows.back().push_back(x.convert_to<int>());
    }
  }
  return rows;
}

TriangleRows read_triangle(std::istream& in) { return parse_triangle(read_all(in)); }

std::string format_triangle(const TriangleRows& rows) {
  std::ostringstream out;
  out << rows.size() << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

IntVector parse_vector(std::string_view csv) {
  IntVector v;
  std::size_t start = 0;
  while (true) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto tokens = split_ws(csv.substr(start, end - start));
    if (tokens.size() != 1) throw Error(ErrorKind::Parse, "malformed vector '" + std::string(csv) + "'");
    v.push_back(parse_integer(tokens[0]));
    if (end == csv.size()) break;
    start = end + 1;
  }
  return v;
}

std::string format_vector(const IntVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += v[k].str();
  }
  return out;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.order()}, {"rows", std::move(rows)}};
}

nlohmann::json triangle_to_json(const TriangleRows& rows) {
  return {{"n", rows.size()}, {"rows", rows}};
}

nlohmann::json vector_to_json(const IntVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return read_all(in);
}

}  // namespace asmproj
