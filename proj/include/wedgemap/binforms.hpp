#pragma once

// Binary quadratic forms a x^2 + b xy + c y^2: reduction of positive definite
// forms and Gauss composition.

#include <iosfwd>
#include <vector>

#include "wedgemap/intlin.hpp"

namespace wedgemap {

struct BinaryQuadraticForm {
  Integer a, b, c;

  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q);

Integer disc(const BinaryQuadraticForm& q);
bool is_primitive(const BinaryQuadraticForm& q);

/// Q(T(x, y)) for a 2 x 2 integer matrix T acting on column vectors (x, y).
BinaryQuadraticForm transform(const BinaryQuadraticForm& q, const IntMatrix& T);

struct Reduction {
  BinaryQuadraticForm form;
  IntMatrix transform;  // in SL_2(Z), with Q o T = form
};

/// Gauss reduction of a positive definite form to |b| <= a <= c, with b >= 0
/// when |b| = a or a = c.
Reduction reduce_definite(const BinaryQuadraticForm& q);

bool is_reduced_definite(const BinaryQuadraticForm& q);

bool equivalent_definite(const BinaryQuadraticForm& q1, const BinaryQuadraticForm& q2);

struct ArndtWitness {
  Integer x1;
  Integer x2;
  IntVector lambda;  // Bezout coefficients for (-a3, -a2, (b2+b3)/2)
  BinaryQuadraticForm cube_form;  // (a1, b1, c1), before the final swap
};

struct Composition {
  BinaryQuadraticForm form;  // (c1, b1, a1), representing [Q2] + [Q3]
  ArndtWitness witness;
};

/// Composition through the explicit cube construction: one gcd, then the
/// composed form is read off in closed form.
Composition compose_arndt(const BinaryQuadraticForm& q2, const BinaryQuadraticForm& q3);

/// Classical Dirichlet composition, valid when gcd(a2, a3, (b2+b3)/2) = 1.
BinaryQuadraticForm compose_dirichlet(const BinaryQuadraticForm& q2,
                                      const BinaryQuadraticForm& q3);

/// Principal form of discriminant D: (1, D mod 2, (D mod 2 - D) / 4).
BinaryQuadraticForm principal_form(const Integer& D);

/// All primitive reduced positive definite forms of discriminant D < 0.
std::vector<BinaryQuadraticForm> reduced_forms(const Integer& D);

}  // namespace wedgemap
