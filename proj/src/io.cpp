#include "wedgemap/io.hpp"

#include <istream>
#include <limits>
#include <sstream>

#include "wedgemap/errors.hpp"

namespace wedgemap::io {

namespace {

std::string next_token(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw InputError(std::string("unexpected end of input reading ") + what);
  return tok;
}

long parse_dimension(std::istream& in, const char* what) {
  Integer v = parse_integer(next_token(in, what));
  if (v < 0 || v > std::numeric_limits<int>::max())
    throw InputError(std::string("bad ") + what + ": " + v.get_str());
  return v.get_si();
}

void expect_end(std::istream& in) {
  std::string extra;
  if (in >> extra) throw InputError("trailing token '" + extra + "'");
}

}  // namespace

Integer parse_integer(std::string_view token) {
  std::size_t i = (!token.empty() && token[0] == '-') ? 1 : 0;
  if (i == token.size()) throw InputError("expected an integer, got '" + std::string(token) + "'");
  for (std::size_t j = i; j < token.size(); ++j)
    if (token[j] < '0' || token[j] > '9')
      throw InputError("expected an integer, got '" + std::string(token) + "'");
  return Integer(std::string(token), 10);
}

IntMatrix read_matrix(std::istream& in) {
  const long rows = parse_dimension(in, "row count");
  const long cols = parse_dimension(in, "column count");
  if (rows < 1 || cols < 1) throw InputError("matrix dimensions must be positive");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_integer(next_token(in, "matrix entry"));
  expect_end(in);
  return m;
}

PluckerVector read_plucker(std::istream& in) {
  const long n = parse_dimension(in, "ambient dimension");
  const long k = parse_dimension(in, "grade");
  if (n < 1 || k < 1 || k > n) throw InputError("Plücker header needs 1 <= k <= n");
  const Integer count = binomial(static_cast<int>(n), static_cast<int>(k));
  if (!count.fits_slong_p() || count > 10'000'000) throw InputError("too many coordinates");
  IntVector coords;
  for (long i = 0; i < count.get_si(); ++i) coords.push_back(parse_integer(next_token(in, "coordinate")));
  expect_end(in);
  return PluckerVector(static_cast<int>(n), static_cast<int>(k), std::move(coords));
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    if (m.cols()) os << '\n';
  }
  return os.str();
}

std::string format_plucker(const PluckerVector& p) {
  std::ostringstream os;
  os << p.n << ' ' << p.k << '\n';
  for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? " " : "") << p.coords[i];
  os << '\n';
  return os.str();
}

std::string format_form(const BinaryQuadraticForm& q) {
  std::ostringstream os;
  os << q.a << ' ' << q.b << ' ' << q.c << '\n';
  return os.str();
}

std::string format_cube(const BhargavaCube& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 4; ++i) os << c.x[i] << ' ';
  for (std::size_t i = 0; i < 4; ++i) os << c.y[i] << (i < 3 ? " " : "\n");
  return os.str();
}

nlohmann::json to_json(const Integer& x) { return x.get_str(); }

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const PluckerVector& p) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : p.coords) coords.push_back(to_json(c));
  return {{"n", p.n}, {"k", p.k}, {"coords", std::move(coords)}};
}

nlohmann::json to_json(const BinaryQuadraticForm& q) {
  return {{"a", to_json(q.a)}, {"b", to_json(q.b)}, {"c", to_json(q.c)}};
}

nlohmann::json to_json(const BhargavaCube& c) {
  nlohmann::json x = nlohmann::json::array(), y = nlohmann::json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    x.push_back(to_json(c.x[i]));
    y.push_back(to_json(c.y[i]));
  }
  return {{"x", std::move(x)}, {"y", std::move(y)}};
}

}  // namespace wedgemap::io
