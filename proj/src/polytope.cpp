#include "asmproj/polytope.hpp"

#include <sstream>

#include "asmproj/io.hpp"

namespace asmproj {

namespace {

std::string line_name(bool is_row, std::size_t index) {
  return std::string(is_row ? "row " : "column ") + std::to_string(index + 1);
}

std::vector<Rational> line(const RationalMatrix& m, bool is_row, std::size_t index) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < m.order(); ++k) out.push_back(is_row ? m(index, k) : m(k, index));
  return out;
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

void require_same_order(const PolytopeMatrix& a, const PolytopeMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch,
                std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
}

// D -= c * block, 1-based corners.
void subtract_block(RationalMatrix& d, const Rational& c, const TBlock& b) {
  const auto at = [&](int i, int j) -> Rational& {
    return d(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  };
  const Rational s = c * b.sign;
  at(b.i1, b.j1) -= s;
  at(b.i2, b.j2) -= s;
  at(b.i2, b.j1) += s;
  at(b.i1, b.j2) += s;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.order()) {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) (*this)(i, j) = Rational(m(i, j));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) + " entries");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : entries_)
    if (q != 0) return false;
  return true;
}

void RationalMatrix::require_same_order(const RationalMatrix& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorKind::OrderMismatch,
                std::to_string(order_) + " vs " + std::to_string(other.order_));
  }
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

PolytopeMatrix validate_polytope(const RationalMatrix& m) {
  const std::size_t n = m.order();
  for (bool is_row : {true, false}) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational sum = 0;
      for (const auto& q : line(m, is_row, k)) sum += q;
      if (sum != 1) {
        throw Error(ErrorKind::LineSumNotOne,
                    line_name(is_row, k) + " sums to " + format_rational(sum));
      }
    }
  }
  for (bool is_row : {true, false}) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto entries = line(m, is_row, k);
      Rational prefix = 0, suffix = 0;
      for (std::size_t len = 1; len <= n; ++len) {
        prefix += entries[len - 1];
        if (prefix < 0) {
          throw Error(ErrorKind::NegativePartialSum,
                      line_name(is_row, k) + ", prefix " + std::to_string(len));
        }
        suffix += entries[n - len];
        if (suffix < 0) {
          throw Error(ErrorKind::NegativePartialSum,
                      line_name(is_row, k) + ", suffix " + std::to_string(len));
        }
      }
    }
  }
  return PolytopeMatrix(m);
}

RationalVector weighted_projection(const RationalMatrix& m) {
  const std::size_t n = m.order();
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[j] += Rational(static_cast<long long>(n - i)) * m(i, j);
  return v;
}

TBlock block_through(int r1, int c1, int r2, int c2) {
  const int sign = ((r2 - r1) > 0) == ((c2 - c1) > 0) ? 1 : -1;
  return {std::min(r1, r2), std::min(c1, c2), std::max(r1, r2), std::max(c1, c2), sign};
}

IntMatrix tblock_matrix(const TBlock& b, std::size_t n) {
  const int size = static_cast<int>(n);
  if (b.i1 < 1 || b.j1 < 1 || b.i2 > size || b.j2 > size || b.i1 >= b.i2 || b.j1 >= b.j2 ||
      (b.sign != 1 && b.sign != -1)) {
    throw Error(ErrorKind::CornerOutOfRange,
                "T(" + std::to_string(b.i1) + "," + std::to_string(b.j1) + ";" +
                    std::to_string(b.i2) + "," + std::to_string(b.j2) + ") at order " +
                    std::to_string(n));
  }
  IntMatrix m(n);
  const auto at = [&](int i, int j) -> Integer& {
    return m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  };
  at(b.i1, b.j1) = b.sign;
  at(b.i2, b.j2) = b.sign;
  at(b.i2, b.j1) = -b.sign;
  at(b.i1, b.j2) = -b.sign;
  return m;
}

std::vector<TBlockTerm> decompose_tblocks(const PolytopeMatrix& a, const PolytopeMatrix& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  RationalMatrix d = b.matrix() - a.matrix();
  std::vector<TBlockTerm> terms;
  std::size_t previous = 0;
  bool first_step = true;

  while (true) {
    std::size_t position = n * n;
    for (std::size_t k = 0; k < n * n; ++k) {
      if (d(k / n, k % n) != 0) {
        position = k;
        break;
      }
    }
    if (position == n * n) break;
    if (!first_step && position <= previous) {
      throw Error(ErrorKind::Internal, "row-major scan did not advance");
    }
    first_step = false;
    previous = position;

    const std::size_t i = position / n, j = position % n;
    const Rational c = d(i, j);
    const int s = sign_of(c);
    std::size_t jp = n, ip = n;
    for (std::size_t k = j + 1; k < n; ++k)
      if (sign_of(d(i, k)) == -s) { jp = k; break; }
    for (std::size_t k = i + 1; k < n; ++k)
      if (sign_of(d(k, j)) == -s) { ip = k; break; }
    if (jp == n || ip == n) {
      throw Error(ErrorKind::Internal, "no opposite-sign partner; inputs have unequal line sums");
    }

    const TBlock block{static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(ip + 1),
                       static_cast<int>(jp + 1), 1};
    subtract_block(d, c, block);
    terms.push_back({c, block, std::nullopt});
    if (terms.size() > n * n) throw Error(ErrorKind::Internal, "more than n^2 terms");
  }
  return terms;
}

std::vector<TBlockTerm> decompose_paired(const PolytopeMatrix& a, const PolytopeMatrix& b) {
  require_same_order(a, b);
  if (weighted_projection(a.matrix()) != weighted_projection(b.matrix())) {
    throw Error(ErrorKind::ProjectionMismatch, "weighted projections differ");
  }
  const std::size_t n = a.order();
  RationalMatrix d = b.matrix() - a.matrix();
  std::vector<TBlockTerm> terms;
  std::size_t previous = 0;
  bool first_step = true;

  while (true) {
    std::size_t position = n * n;  // column-major index j * n + i
    for (std::size_t k = 0; k < n * n; ++k) {
      if (d(k % n, k / n) != 0) {
        position = k;
        break;
      }
    }
    if (position == n * n) break;
    if (!first_step && position <= previous) {
      throw Error(ErrorKind::Internal, "column-major scan did not advance");
    }
    first_step = false;
    previous = position;

    const std::size_t j = position / n, i = position % n;
    const Rational c = d(i, j);
    const int s = sign_of(c);
    std::size_t ip = n, p = n, jp = n;
    for (std::size_t k = i + 1; k < n; ++k)
      if (sign_of(d(k, j)) == -s) { ip = k; break; }
    // A zero weighted column sum forces a same-sign entry below i'.
    for (std::size_t k = ip + 1; k < n; ++k)
      if (sign_of(d(k, j)) == s) { p = k; break; }
    for (std::size_t k = j + 1; k < n; ++k)
      if (sign_of(d(i, k)) == -s) { jp = k; break; }
    if (ip >= n || p >= n || jp >= n) {
      throw Error(ErrorKind::Internal, "paired decomposition lost its partner entries");
    }
    const std::size_t pp = p - (ip - i);

    const TBlock first{static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(ip + 1),
                       static_cast<int>(jp + 1), 1};
    const TBlock second = block_through(static_cast<int>(p + 1), static_cast<int>(j + 1),
                                        static_cast<int>(pp + 1), static_cast<int>(jp + 1));
    if (first.depth() != -second.depth()) {
      throw Error(ErrorKind::Internal, "paired blocks do not have opposite depth");
    }
    subtract_block(d, c, first);
    subtract_block(d, c, second);
    terms.push_back({c, first, second});
    if (terms.size() > n * n) throw Error(ErrorKind::Internal, "more than n^2 terms");
  }
  return terms;
}

RationalMatrix apply_terms(const RationalMatrix& a, const std::vector<TBlockTerm>& terms) {
  RationalMatrix out = a;
  for (const auto& term : terms) {
    const auto add = [&](const TBlock& b) {
      const IntMatrix m = tblock_matrix(b, a.order());
      for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
          if (m(i, j) != 0) out(i, j) += term.coefficient * Rational(m(i, j));
    };
    add(term.block);
    if (term.partner) add(*term.partner);
  }
  return out;
}

std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token));
  const Integer num = parse_integer(token.substr(0, slash));
  const Integer den = parse_integer(token.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(token) + "'");
  return Rational(num, den);
}

std::string format_term(const TBlockTerm& term) {
  const auto block = [](char name, const TBlock& b) {
    return std::string(1, name) + "(" + std::to_string(b.i1) + "," + std::to_string(b.j1) + ";" +
           std::to_string(b.i2) + "," + std::to_string(b.j2) + "," + (b.sign > 0 ? "+" : "-") + ")";
  };
  const Integer num = boost::multiprecision::numerator(term.coefficient);
  const Integer den = boost::multiprecision::denominator(term.coefficient);
  std::string out = num.str() + "/" + den.str() + "  " + block('T', term.block);
  if (term.partner) out += "  " + block('S', *term.partner);
  return out;
}

std::string format_terms(const std::vector<TBlockTerm>& terms) {
  std::string out;
  for (const auto& t : terms) out += format_term(t) + "\n";
  return out;
}

RationalMatrix rational_matrix_from_json(const nlohmann::json& doc) {
  try {
    const std::size_t n = doc.at("n").get<std::size_t>();
    const auto& rows = doc.at("rows");
    if (!rows.is_array() || rows.size() != n) {
      throw Error(ErrorKind::Parse, "\"rows\" must hold n rows");
    }
    std::vector<std::vector<Rational>> parsed;
    for (const auto& row : rows) {
      if (!row.is_array()) throw Error(ErrorKind::Parse, "each row must be an array");
      parsed.emplace_back();
      for (const auto& cell : row) {
        if (cell.is_string()) {
          parsed.back().push_back(parse_rational(cell.get<std::string>()));
        } else if (cell.is_number_integer()) {
          parsed.back().emplace_back(cell.get<long long>());
        } else {
          throw Error(ErrorKind::Parse, "entries must be \"p/q\" strings or integers");
        }
      }
    }
    return RationalMatrix::from_rows(parsed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  try {
    return rational_matrix_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

nlohmann::json rational_matrix_to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.order()}, {"rows", std::move(rows)}};
}

}  // namespace asmproj
