#pragma once

// Plain-text carriers for matrices, triangles and vectors.
//
//   matrix:   first line n, then n lines of n integers; "+" and "-" are read
//             as 1 and -1.
//   triangle: first line n, then row i holding i integers.
//   vector:   comma-separated integers, e.g. "4,3,1,4,7,5,4".
//
// Malformed input throws Error(ErrorKind::Parse).

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "asmproj/core.hpp"

namespace asmproj {

IntMatrix read_matrix(std::istream& in);
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

TriangleRows read_triangle(std::istream& in);
TriangleRows parse_triangle(std::string_view text);
std::string format_triangle(const TriangleRows& rows);
inline std::string format_triangle(const RowIncreasingTriangle& t) { return format_triangle(t.rows()); }
inline std::string format_triangle(const MonotoneTriangle& t) { return format_triangle(t.rows()); }

IntVector parse_vector(std::string_view csv);
std::string format_vector(const IntVector& v);

Integer parse_integer(std::string_view token);

// {"n": n, "rows": [[...], ...]} with integer entries as JSON numbers when
// they fit in 64 bits and as strings otherwise.
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json triangle_to_json(const TriangleRows& rows);
nlohmann::json vector_to_json(const IntVector& v);

std::string read_all(std::istream& in);
std::string read_file(const std::string& path);

}  // namespace asmproj
