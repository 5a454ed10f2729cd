#pragma once

// Text and JSON serialization. The text formats are canonical:
//
//   matrix file:   "rows cols" followed by rows*cols integers, row-major
//   Plücker file:  "n k" followed by C(n, k) integers in lex subset order
//
// Tokens are whitespace separated. JSON carries integers as decimal strings.

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "wedgemap/binforms.hpp"
#include "wedgemap/cubes.hpp"
#include "wedgemap/exterior.hpp"
#include "wedgemap/intlin.hpp"

namespace wedgemap::io {

/// Parses an optionally signed decimal integer; throws InputError otherwise.
Integer parse_integer(std::string_view token);

IntMatrix read_matrix(std::istream& in);
PluckerVector read_plucker(std::istream& in);

std::string format_matrix(const IntMatrix& m);
std::string format_plucker(const PluckerVector& p);
std::string format_form(const BinaryQuadraticForm& q);
std::string format_cube(const BhargavaCube& c);

nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const PluckerVector& p);
nlohmann::json to_json(const BinaryQuadraticForm& q);
nlohmann::json to_json(const BhargavaCube& c);

}  // namespace wedgemap::io
