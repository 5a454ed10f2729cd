#include "wedgemap/binforms.hpp"

#include <ostream>

#include "wedgemap/errors.hpp"

namespace wedgemap {

namespace {

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw MathError(Reason::Internal, std::string("inexact division computing ") + what);
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

void require_same_disc(const BinaryQuadraticForm& q2, const BinaryQuadraticForm& q3) {
  if (disc(q2) != disc(q3))
    throw MathError(Reason::DiscriminantMismatch,
                    disc(q2).get_str() + " vs " + disc(q3).get_str());
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q) {
  return os << '(' << q.a << ", " << q.b << ", " << q.c << ')';
}

Integer disc(const BinaryQuadraticForm& q) { return q.b * q.b - 4 * q.a * q.c; }

bool is_primitive(const BinaryQuadraticForm& q) { return gcd3(q.a, q.b, q.c) == 1; }

BinaryQuadraticForm transform(const BinaryQuadraticForm& q, const IntMatrix& T) {
  const Integer &p = T(0, 0), &r = T(0, 1), &s = T(1, 0), &t = T(1, 1);
  return {q.a * p * p + q.b * p * s + q.c * s * s,
          2 * q.a * p * r + q.b * (p * t + r * s) + 2 * q.c * s * t,
          q.a * r * r + q.b * r * t + q.c * t * t};
}

bool is_reduced_definite(const BinaryQuadraticForm& q) {
  if (q.a <= 0 || abs(q.b) > q.a || q.a > q.c) return false;
  if ((abs(q.b) == q.a || q.a == q.c) && q.b < 0) return false;
  return true;
}

Reduction reduce_definite(const BinaryQuadraticForm& q) {
  if (disc(q) >= 0 || q.a <= 0)
    throw MathError(Reason::NotDefinite, "form is not positive definite");
  BinaryQuadraticForm f = q;
  IntMatrix T = IntMatrix::identity(2);

  auto translate = [&] {
    // b -> b + 2ak lands in (-a, a].
    Integer k;
    Integer num = f.a - f.b;
    Integer den = 2 * f.a;
    mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (k == 0) return;
    f = {f.a, f.b + 2 * f.a * k, f.a * k * k + f.b * k + f.c};
    for (std::size_t i = 0; i < 2; ++i) T(i, 1) += k * T(i, 0);
  };
  auto swap = [&] {
    f = {f.c, -f.b, f.a};
    for (std::size_t i = 0; i < 2; ++i) {
      Integer t0 = T(i, 0);
      T(i, 0) = T(i, 1);
      T(i, 1) = -t0;
    }
  };

  while (true) {
    translate();
    if (f.a > f.c) {
      swap();
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) swap();
  return {f, T};
}

bool equivalent_definite(const BinaryQuadraticForm& q1, const BinaryQuadraticForm& q2) {
  require_same_disc(q1, q2);
  return reduce_definite(q1).form == reduce_definite(q2).form;
}

Composition compose_arndt(const BinaryQuadraticForm& q2, const BinaryQuadraticForm& q3) {
  require_same_disc(q2, q3);
  if (!is_primitive(q2) || !is_primitive(q3))
    throw MathError(Reason::NonPrimitive, "composition needs primitive forms");
  if (q2.a == 0 || q3.a == 0)
    throw MathError(Reason::ZeroLeadingCoefficient, "leading coefficient is zero");
  const Integer D = disc(q2);
  const Integer half_sum = (q2.b + q3.b) / 2;
  const Integer half_diff = (q2.b - q3.b) / 2;

  IntVector v{-q3.a, -q2.a, half_sum};
  BezoutResult bz = multi_gcd_bezout(v);
  const Integer& x1 = bz.g;
  const Integer x2 = bz.coeffs[1] * half_diff - bz.coeffs[2] * q2.c;

  const Integer c1 = exact_div(q2.a * q3.a, x1 * x1, "c1");
  const Integer b1 = q2.b + exact_div(2 * q2.a * x2, x1, "b1");
  const Integer a1 = exact_div((b1 * b1 - D) * x1 * x1, 4 * q2.a * q3.a, "a1");

  return {{c1, b1, a1}, {x1, x2, std::move(bz.coeffs), {a1, b1, c1}}};
}

BinaryQuadraticForm compose_dirichlet(const BinaryQuadraticForm& q2,
                                      const BinaryQuadraticForm& q3) {
  require_same_disc(q2, q3);
  if (q2.a == 0 || q3.a == 0)
    throw MathError(Reason::ZeroLeadingCoefficient, "leading coefficient is zero");
  const Integer D = disc(q2);
  IntVector v{q2.a, q3.a, (q2.b + q3.b) / 2};
  BezoutResult bz = multi_gcd_bezout(v);
  if (bz.g != 1)
    throw MathError(Reason::CongruencePrecondition,
                    "gcd(a2, a3, (b2+b3)/2) = " + bz.g.get_str());
  const Integer& u = bz.coeffs[0];
  const Integer& w = bz.coeffs[1];
  const Integer& z = bz.coeffs[2];
  const Integer a = q2.a * q3.a;
  Integer B = u * q2.a * q3.b + w * q3.a * q2.b + z * exact_div(q2.b * q3.b + D, 2, "B");
  Integer m = abs(2 * a);
  mpz_fdiv_r(B.get_mpz_t(), B.get_mpz_t(), m.get_mpz_t());
  return {a, B, exact_div(B * B - D, 4 * a, "c")};
}

BinaryQuadraticForm principal_form(const Integer& D) {
  Integer e;
  mpz_fdiv_r_ui(e.get_mpz_t(), D.get_mpz_t(), 4);
  if (e != 0 && e != 1)
    throw MathError(Reason::InvalidDiscriminant, D.get_str() + " is not 0 or 1 mod 4");
  return {1, e, (e - D) / 4};
}

std::vector<BinaryQuadraticForm> reduced_forms(const Integer& D) {
  if (D >= 0) throw MathError(Reason::InvalidDiscriminant, "discriminant must be negative");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), D.get_mpz_t(), 4);
  if (r != 0 && r != 1)
    throw MathError(Reason::InvalidDiscriminant, D.get_str() + " is not 0 or 1 mod 4");
  const Integer absD = -D;
  std::vector<BinaryQuadraticForm> out;
  for (Integer a = 1; 3 * a * a <= absD; ++a) {
    for (Integer b = -a; b <= a; ++b) {
      Integer num = b * b - D;
      Integer den = 4 * a;
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
      Integer c = num / den;
      BinaryQuadraticForm f{a, b, c};
      if (is_reduced_definite(f) && is_primitive(f)) out.push_back(f);
    }
  }
  return out;
}

}  // namespace wedgemap
