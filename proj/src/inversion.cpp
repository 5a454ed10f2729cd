#include "wedgemap/inversion.hpp"

#include <string>

#include "wedgemap/errors.hpp"

namespace wedgemap {

namespace {

std::string to_str(const Integer& x) { return x.get_str(); }

std::size_t first_nonzero(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// Multiply column j of X by c, then flip it if its wedge disagrees in sign
// with target. Throws if the result is not exactly the target.
void fix_scale_and_orientation(VectorSystem& X, const Integer& c, const PluckerVector& target) {
  for (std::size_t i = 0; i < X.rows(); ++i) X(i, 0) *= c;
  PluckerVector w = wedge(X);
  const std::size_t idx = first_nonzero(target.coords);
  if (idx < w.coords.size() && w.coords[idx] == -target.coords[idx]) {
    X.negate_column(0);
    w = wedge(X);
  }
  if (w != target) throw MathError(Reason::Internal, "kernel wedge is not a multiple of the target");
}

}  // namespace

Integer cox_solve(std::span<const Integer> p, std::span<const Integer> q, const Integer& y) {
  if (p.size() != q.size() || p.empty()) throw InputError("p and q must have equal nonzero length");
  if (y == 0) throw MathError(Reason::CongruencePrecondition, "modulus is zero");

  IntVector with_mod(p.begin(), p.end());
  with_mod.push_back(y);
  BezoutResult b = multi_gcd_bezout(with_mod);
  if (b.g != 1)
    throw MathError(Reason::CongruencePrecondition, "gcd(y, p) = " + to_str(b.g));

  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      Integer minor = p[i] * q[j] - p[j] * q[i];
      if (!mpz_divisible_p(minor.get_mpz_t(), y.get_mpz_t()))
        throw MathError(Reason::CongruencePrecondition,
                        "minor (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") = " + to_str(minor) + " not divisible by " + to_str(y));
    }

  Integer x = 0;
  for (std::size_t i = 0; i < p.size(); ++i) x += b.coeffs[i] * q[i];
  Integer m = abs(y);
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return x;
}

Rank2Inversion invert_rank2(const PluckerVector& Y, Rank2Options opts) {
  if (Y.k != 2) throw InputError("rank-2 inversion needs a grade-2 vector");
  if (Y.is_zero()) throw MathError(Reason::ZeroVector, "cannot invert the zero vector");
  auto violations = plucker_check(Y);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw MathError(Reason::RelationViolation,
                    "quadruple " + std::to_string(v.quadruple[0]) + " " +
                        std::to_string(v.quadruple[1]) + " " + std::to_string(v.quadruple[2]) +
                        " " + std::to_string(v.quadruple[3]) + " residue " + to_str(v.residue));
  }

  const int n = Y.n;
  const auto subsets = lex_subsets(n, 2);
  std::size_t pos = first_nonzero(Y.coords);
  const int pi = subsets[pos].elements()[0];
  const int pj = subsets[pos].elements()[1];

  // order[a] is the original coordinate placed at position a.
  std::vector<int> order{pi, pj};
  for (int r = 0; r < n; ++r)
    if (r != pi && r != pj) order.push_back(r);

  auto coord = [&](int a, int b) -> Integer {
    const int r = order[static_cast<std::size_t>(a)];
    const int s = order[static_cast<std::size_t>(b)];
    return r < s ? Y[SubsetIndex(n, {r, s})] : Integer(-Y[SubsetIndex(n, {s, r})]);
  };

  IntVector row0;
  for (int b = 1; b < n; ++b) row0.push_back(coord(0, b));
  BezoutResult bz = multi_gcd_bezout(row0);
  const Integer& x1 = bz.g;

  const auto un = static_cast<std::size_t>(n);
  IntVector x(un, Integer(0)), y(un, Integer(0));
  x[0] = x1;
  for (int b = 1; b < n; ++b) y[static_cast<std::size_t>(b)] = row0[static_cast<std::size_t>(b - 1)] / x1;

  Integer x2 = 0;
  for (int b = 2; b < n; ++b) x2 += bz.coeffs[static_cast<std::size_t>(b - 1)] * coord(1, b);
  if (opts.reduce_second) {
    Integer m = abs(y[1]);
    mpz_fdiv_r(x2.get_mpz_t(), x2.get_mpz_t(), m.get_mpz_t());
  }
  x[1] = x2;

  for (int b = 2; b < n; ++b) {
    const auto ub = static_cast<std::size_t>(b);
    Integer num = x2 * y[ub] - coord(1, b);
    if (!mpz_divisible_p(num.get_mpz_t(), y[1].get_mpz_t()))
      throw MathError(Reason::Divisibility, "coordinate " + std::to_string(order[ub] + 1) +
                                                " is not integral");
    mpz_divexact(x[ub].get_mpz_t(), num.get_mpz_t(), y[1].get_mpz_t());
  }

  VectorSystem sys(un, 2);
  for (std::size_t a = 0; a < un; ++a) {
    const auto r = static_cast<std::size_t>(order[a]);
    sys(r, 0) = x[a];
    sys(r, 1) = y[a];
  }
  if (wedge(sys) != Y) throw MathError(Reason::Divisibility, "preimage does not reproduce the input");
  return {std::move(sys), {pi + 1, pj + 1}, std::move(bz)};
}

VectorSystem invert_codim1(const PluckerVector& Y) {
  if (Y.n < 2 || Y.k != Y.n - 1) throw InputError("codimension-one inversion needs grade n-1");
  if (Y.is_zero()) throw MathError(Reason::ZeroVector, "cannot invert the zero vector");
  PluckerVector normal = hat(Y);
  const Integer c = content(normal.coords);
  IntMatrix row(1, static_cast<std::size_t>(Y.n));
  for (std::size_t j = 0; j < normal.coords.size(); ++j) row(0, j) = normal.coords[j] / c;
  VectorSystem K = kernel_basis(row);
  fix_scale_and_orientation(K, c, Y);
  return K;
}

VectorSystem invert_complement(const VectorSystem& W) {
  const int n = static_cast<int>(W.rows());
  const int k = static_cast<int>(W.cols());
  if (k < 1 || k >= n - k) throw InputError("complement inversion needs 0 < k < n - k");
  PluckerVector w = wedge(W);
  if (w.is_zero()) throw MathError(Reason::ZeroVector, "system has zero wedge");
  const Integer c = content(w.coords);
  VectorSystem K = kernel_basis(W.transpose());
  fix_scale_and_orientation(K, c, hat(w));
  return K;
}

VectorSystem invert(const PluckerVector& Y) {
  const int n = Y.n;
  const int k = Y.k;
  if (k < 1) throw InputError("grade must be at least 1");
  if (Y.is_zero()) throw MathError(Reason::ZeroVector, "cannot invert the zero vector");
  if (k == 1) return IntMatrix::from_columns({Y.coords});
  if (k == 2) return invert_rank2(Y).system;
  if (k == n - 1) return invert_codim1(Y);
  if (k == n - 2) {
    VectorSystem W = invert_rank2(hat(Y)).system;
    VectorSystem V = invert_complement(W);
    if ((n * (n + 1) / 2) % 2) V.negate_column(0);
    return V;
  }
  if (k == n) {
    IntMatrix D = IntMatrix::identity(static_cast<std::size_t>(n));
    D(0, 0) = Y.coords[0];
    return D;
  }
  throw MathError(Reason::UnsupportedGrade,
                  "no inversion algorithm for n=" + std::to_string(n) + " k=" + std::to_string(k));
}

IntMatrix transition_matrix(const VectorSystem& A, const VectorSystem& E) {
  if (A.rows() != E.rows() || A.cols() != E.cols())
    throw InputError("transition matrix needs systems of equal shape");
  const std::size_t k = A.cols();
  PluckerVector wa = wedge(A);
  PluckerVector we = wedge(E);
  if (!is_primitive(wa))
    throw MathError(Reason::NonPrimitive, "content of wedge(A) is " + to_str(content(wa.coords)));

  const std::size_t idx = first_nonzero(wa.coords);
  Integer t;
  if (!mpz_divisible_p(we.coords[idx].get_mpz_t(), wa.coords[idx].get_mpz_t()))
    throw MathError(Reason::NotProportional, "wedge(E) is not an integer multiple of wedge(A)");
  mpz_divexact(t.get_mpz_t(), we.coords[idx].get_mpz_t(), wa.coords[idx].get_mpz_t());
  for (std::size_t i = 0; i < wa.coords.size(); ++i)
    if (we.coords[i] != t * wa.coords[i])
      throw MathError(Reason::NotProportional, "wedge(E) is not an integer multiple of wedge(A)");
  if (t == 0) throw MathError(Reason::NotProportional, "wedge(E) is zero");

  const IntVector L = multi_gcd_bezout(wa.coords).coeffs;
  IntMatrix H(k, k);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t c = 0; c < k; ++c) {
      VectorSystem M = A;
      M.set_column(s, E.column(c));
      PluckerVector wm = wedge(M);
      for (std::size_t i = 0; i < L.size(); ++i) H(s, c) += L[i] * wm.coords[i];
    }
  if (A * H != E || det(H) != t)
    throw MathError(Reason::Internal, "transition matrix check failed");
  return H;
}

}  // namespace wedgemap
