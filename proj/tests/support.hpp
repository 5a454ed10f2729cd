#pragma once

// Test-only oracles and random generators. Nothing here calls into the code
// paths it is used to check.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "wedgemap/binforms.hpp"
#include "wedgemap/cubes.hpp"
#include "wedgemap/intlin.hpp"

namespace wedgemap::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  IntVector vector(std::size_t n, long lo, long hi) {
    IntVector v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  IntMatrix matrix(std::size_t r, std::size_t c, long lo, long hi) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  /// Product of random elementary column operations: det = +1.
  IntMatrix unimodular(std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    for (int s = 0; s < steps; ++s) {
      auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      Integer f = uniform(-3, 3);
      for (std::size_t r = 0; r < n; ++r) u(r, i) += f * u(r, j);
    }
    return u;
  }

  /// Symmetric positive definite B^T B + I.
  IntMatrix positive_definite(std::size_t n, long bound) {
    IntMatrix b = matrix(n, n, -bound, bound);
    IntMatrix a = b.transpose() * b;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 1;
    return a;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer t = m(0, j) * cofactor_det(minor);
    total += (j % 2) ? Integer(-t) : t;
  }
  return total;
}

/// Smallest x in [0, |y|) with p_i x == q_i (mod y) for all i, by search.
inline std::optional<long> brute_congruence(const std::vector<long>& p, const std::vector<long>& q,
                                            long y) {
  const long m = y < 0 ? -y : y;
  std::optional<long> found;
  for (long x = 0; x < m; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) ok = ((p[i] * x - q[i]) % m) == 0;
    if (ok) {
      if (found) return std::nullopt;  // not unique
      found = x;
    }
  }
  return found;
}

/// Coefficients of -det(M u - N v) by direct expansion.
inline BinaryQuadraticForm form_by_expansion(const Face& M, const Face& N) {
  return {-(M.m00 * M.m11 - M.m01 * M.m10),
          M.m00 * N.m11 + N.m00 * M.m11 - M.m01 * N.m10 - N.m01 * M.m10,
          -(N.m00 * N.m11 - N.m01 * N.m10)};
}

/// Decides SL_2(Z)-equivalence of positive definite forms by searching for
/// the first column of a transformation. Independent of reduction.
inline bool equivalent_by_search(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
  const Integer D = f.b * f.b - 4 * f.a * f.c;
  if (D != g.b * g.b - 4 * g.a * g.c) return false;
  const Integer absD = -D;
  // |D| s^2 <= 4 a g.a and |D| p^2 <= 4 c g.a.
  Integer smax = sqrt(Integer(4 * f.a * g.a / absD)) + 1;
  Integer pmax = sqrt(Integer(4 * f.c * g.a / absD)) + 1;
  for (Integer s = -smax; s <= smax; ++s)
    for (Integer p = -pmax; p <= pmax; ++p) {
      if (f.a * p * p + f.b * p * s + f.c * s * s != g.a) continue;
      Integer gg, r0, t0;
      // r0 * s - ... : find (r, t) with p t - r s = 1.
      mpz_gcdext(gg.get_mpz_t(), t0.get_mpz_t(), r0.get_mpz_t(), p.get_mpz_t(), s.get_mpz_t());
      if (gg != 1) continue;
      r0 = -r0;  // p*t0 + s*(-r0) = 1
      // b-coefficient of the transformed form for (r0 + m p, t0 + m s).
      Integer b0 = 2 * f.a * p * r0 + f.b * (p * t0 + r0 * s) + 2 * f.c * s * t0;
      Integer diff = g.b - b0;
      Integer den = 2 * g.a;
      if (mpz_divisible_p(diff.get_mpz_t(), den.get_mpz_t())) return true;
    }
  return false;
}

/// Solves K c = x over the integers via Cramer's rule on a nonsingular
/// maximal minor of K, or returns nullopt.
inline std::optional<IntVector> integer_coordinates(const IntMatrix& K, const IntVector& x) {
  const std::size_t n = K.rows();
  const std::size_t m = K.cols();
  if (m == 0) {
    for (const auto& v : x)
      if (v != 0) return std::nullopt;
    return IntVector{};
  }
  std::vector<int> rows(m);
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<int> cols(m);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    IntMatrix sub = K.submatrix(rows, cols);
    Integer d = cofactor_det(sub);
    if (d != 0) {
      IntVector c(m);
      for (std::size_t j = 0; j < m; ++j) {
        IntMatrix rep = sub;
        for (std::size_t i = 0; i < m; ++i) rep(i, j) = x[static_cast<std::size_t>(rows[i])];
        Integer num = cofactor_det(rep);
        if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        c[j] = num / d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < m; ++j) s += K(i, j) * c[j];
        if (s != x[i]) return std::nullopt;
      }
      return c;
    }
    // next row subset
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && rows[static_cast<std::size_t>(i)] == static_cast<int>(n - m) + i) --i;
    if (i < 0) return std::nullopt;
    ++rows[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j) rows[j] = rows[j - 1] + 1;
  }
}

}  // namespace wedgemap::testing
