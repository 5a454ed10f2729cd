#pragma once

// 2x2x2 integer cubes and their three attached binary quadratic forms.
//
// A cube is stored by its front face x = (x1 x2; x3 x4) and back face
// y = (y1 y2; y3 y4), both row-major. The other two slicings are views.

#include <array>

#include "wedgemap/binforms.hpp"
#include "wedgemap/exterior.hpp"

namespace wedgemap {

struct BhargavaCube {
  std::array<Integer, 4> x;
  std::array<Integer, 4> y;

  friend bool operator==(const BhargavaCube&, const BhargavaCube&) = default;
};

struct Face {
  Integer m00, m01, m10, m11;
  Integer det() const { return m00 * m11 - m01 * m10; }
  friend bool operator==(const Face&, const Face&) = default;
};

struct Slicing {
  Face M;
  Face N;
};

/// The three slicings (front/back, left/right, top/bottom) as (M_i, N_i).
std::array<Slicing, 3> slices(const BhargavaCube& A);

/// Q_i(u, v) = -det(M_i u - N_i v), for i = 1, 2, 3.
BinaryQuadraticForm cube_form(const BhargavaCube& A, int i);

/// x ^ y for the front/back vectors.
PluckerVector plucker_of_cube(const BhargavaCube& A);

/// All three forms primitive.
bool is_projective(const BhargavaCube& A);

/// A cube whose second and third forms are exactly q2 and q3.
BhargavaCube build_cube(const BinaryQuadraticForm& q2, const BinaryQuadraticForm& q3);

/// A cube whose form classes are the sums of the classes of A and B.
BhargavaCube compose_cubes(const BhargavaCube& A, const BhargavaCube& B);

}  // namespace wedgemap
