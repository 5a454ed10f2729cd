#include "wedgemap/cubes.hpp"

#include <string>

#include "wedgemap/errors.hpp"
#include "wedgemap/inversion.hpp"

namespace wedgemap {

namespace {

// SL_2-equivalent form with a != 0; only needed for square discriminants.
BinaryQuadraticForm with_nonzero_leading(const BinaryQuadraticForm& q) {
  if (q.a != 0) return q;
  if (q.c != 0) return {q.c, -q.b, q.a};
  // b xy  ->  (x + y) y b  ->  swap
  return {q.b, -q.b, 0};
}

}  // namespace

std::array<Slicing, 3> slices(const BhargavaCube& A) {
  const auto& x = A.x;
  const auto& y = A.y;
  return {{
      {{x[0], x[1], x[2], x[3]}, {y[0], y[1], y[2], y[3]}},
      {{x[0], x[2], y[0], y[2]}, {x[1], x[3], y[1], y[3]}},
      {{x[0], y[0], x[1], y[1]}, {x[2], y[2], x[3], y[3]}},
  }};
}

BinaryQuadraticForm cube_form(const BhargavaCube& A, int i) {
  const auto& x = A.x;
  const auto& y = A.y;
  switch (i) {
    case 1: {
      Integer mid = (x[0] * y[3] - x[1] * y[2]) - (x[2] * y[1] - x[3] * y[0]);
      return {-(x[0] * x[3] - x[1] * x[2]), mid, -(y[0] * y[3] - y[1] * y[2])};
    }
    case 2:
    case 3: {
      PluckerVector X = plucker_of_cube(A);
      // lex order: 12 13 14 23 24 34
      const auto& c = X.coords;
      if (i == 2) return {-c[1], c[2] + c[3], -c[4]};
      return {-c[0], c[2] - c[3], -c[5]};
    }
    default:
      throw InputError("cube form index must be 1, 2 or 3");
  }
}

PluckerVector plucker_of_cube(const BhargavaCube& A) {
  IntMatrix m(4, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, 0) = A.x[i];
    m(i, 1) = A.y[i];
  }
  return wedge(m);
}

bool is_projective(const BhargavaCube& A) {
  for (int i = 1; i <= 3; ++i)
    if (!is_primitive(cube_form(A, i))) return false;
  return true;
}

BhargavaCube build_cube(const BinaryQuadraticForm& q2, const BinaryQuadraticForm& q3) {
  if (disc(q2) != disc(q3))
    throw MathError(Reason::DiscriminantMismatch,
                    disc(q2).get_str() + " vs " + disc(q3).get_str());
  if (!is_primitive(q2) || !is_primitive(q3))
    throw MathError(Reason::NonPrimitive, "cube construction needs primitive forms");

  PluckerVector X(4, 2,
                  {-q3.a, -q2.a, (q2.b + q3.b) / 2, (q2.b - q3.b) / 2, -q2.c, -q3.c});
  if (!is_primitive(X))
    throw MathError(Reason::NonPrimitive, "target Plücker vector is not primitive");

  // With the (1,2) pivot this is the closed-form construction using the raw
  // Bezout combination for x2; otherwise fall back to another pivot.
  Rank2Options opts;
  opts.reduce_second = (q3.a == 0);
  VectorSystem xy = invert_rank2(X, opts).system;

  BhargavaCube A;
  for (std::size_t i = 0; i < 4; ++i) {
    A.x[i] = xy(i, 0);
    A.y[i] = xy(i, 1);
  }
  if (cube_form(A, 2) != q2 || cube_form(A, 3) != q3)
    throw MathError(Reason::Internal, "constructed cube does not realize the forms");
  return A;
}

BhargavaCube compose_cubes(const BhargavaCube& A, const BhargavaCube& B) {
  if (!is_projective(A) || !is_projective(B))
    throw MathError(Reason::NonPrimitive, "cube is not projective");
  const Integer dA = disc(cube_form(A, 1));
  const Integer dB = disc(cube_form(B, 1));
  if (dA != dB) throw MathError(Reason::DiscriminantMismatch, dA.get_str() + " vs " + dB.get_str());

  auto add = [&](int i) {
    return compose_arndt(with_nonzero_leading(cube_form(A, i)),
                         with_nonzero_leading(cube_form(B, i)))
        .form;
  };
  return build_cube(add(2), add(3));
}

}  // namespace wedgemap
