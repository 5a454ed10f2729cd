#include "wedgemap/exterior.hpp"

#include <numeric>
#include <string>

#include "wedgemap/errors.hpp"

namespace wedgemap {

SubsetIndex::SubsetIndex(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0 || elements_[i] >= n_)
      throw InputError("subset element out of range");
    if (i && elements_[i] <= elements_[i - 1])
      throw InputError("subset not strictly increasing");
  }
}

long SubsetIndex::weight() const noexcept {
  long w = 0;
  for (int e : elements_) w += e + 1;
  return w;
}

SubsetIndex SubsetIndex::complement() const {
  std::vector<int> rest;
  std::size_t p = 0;
  for (int i = 0; i < n_; ++i) {
    if (p < elements_.size() && elements_[p] == i)
      ++p;
    else
      rest.push_back(i);
  }
  return SubsetIndex(n_, std::move(rest));
}

std::vector<SubsetIndex> lex_subsets(int n, int k) {
  std::vector<SubsetIndex> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.emplace_back(n, cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::size_t lex_rank(const SubsetIndex& s) {
  // Count the subsets that precede s lexicographically.
  const int n = s.n();
  const int k = s.k();
  std::size_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    const int e = s.elements()[static_cast<std::size_t>(i)];
    for (int v = prev + 1; v < e; ++v)
      rank += binomial(n - v - 1, k - i - 1).get_ui();
    prev = e;
  }
  return rank;
}

PluckerVector::PluckerVector(int n_, int k_, IntVector coords_)
    : n(n_), k(k_), coords(std::move(coords_)) {
  if (n < 1 || k < 0 || k > n) throw InputError("invalid grade for exterior power");
  if (binomial(n, k) != static_cast<unsigned long>(coords.size()))
    throw InputError("expected " + binomial(n, k).get_str() + " coordinates for n=" +
                     std::to_string(n) + " k=" + std::to_string(k));
}

bool PluckerVector::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

PluckerVector wedge(const VectorSystem& X) {
  const int n = static_cast<int>(X.rows());
  const int k = static_cast<int>(X.cols());
  if (n < 1 || k < 1 || k > n) throw InputError("wedge needs an n x k system with 1 <= k <= n");
  std::vector<int> cols(static_cast<std::size_t>(k));
  std::iota(cols.begin(), cols.end(), 0);
  IntVector coords;
  for (const auto& I : lex_subsets(n, k)) coords.push_back(det(X.submatrix(I.elements(), cols)));
  return PluckerVector(n, k, std::move(coords));
}

PluckerVector hat(const PluckerVector& Y) {
  const int g = Y.n - Y.k;
  IntVector coords;
  for (const auto& I : lex_subsets(Y.n, g)) {
    SubsetIndex J = I.complement();
    const Integer& v = Y[J];
    coords.push_back(J.weight() % 2 ? Integer(-v) : v);
  }
  return PluckerVector(Y.n, g, std::move(coords));
}

Integer pairing(const VectorSystem& X, const VectorSystem& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw InputError("pairing needs two systems of the same shape");
  return det(X.transpose() * Y);
}

Integer coordinate_pairing(const PluckerVector& a, const PluckerVector& b) {
  if (a.n != b.n || a.k != b.k) throw InputError("coordinate pairing needs equal grades");
  Integer s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

Integer complementary_det(const VectorSystem& X, const VectorSystem& Y) {
  if (X.rows() != Y.rows() || X.cols() + Y.cols() != X.rows())
    throw InputError("complementary determinant needs k and n - k columns");
  IntMatrix M(X.rows(), X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (std::size_t j = 0; j < X.cols(); ++j) M(i, j) = X(i, j);
    for (std::size_t j = 0; j < Y.cols(); ++j) M(i, X.cols() + j) = Y(i, j);
  }
  return det(M);
}

int complementary_sign(int n, int k) {
  return ((n * (n + 1) / 2 + k * (k + 1) / 2) % 2) ? -1 : 1;
}

std::vector<PluckerViolation> plucker_check(const PluckerVector& Y) {
  if (Y.k != 2) throw InputError("Plücker relations are checked on grade-2 vectors only");
  const int n = Y.n;
  auto at = [&](int i, int j) -> const Integer& { return Y[SubsetIndex(n, {i, j})]; };
  std::vector<PluckerViolation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          Integer r = at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k);
          if (r != 0) out.push_back({{i + 1, j + 1, k + 1, l + 1}, r});
        }
  return out;
}

bool is_primitive(const PluckerVector& Y) { return content(Y.coords) == 1; }

}  // namespace wedgemap
