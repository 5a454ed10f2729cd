#pragma once

// Finding preimages of the wedge map: v_1 ^ ... ^ v_k = Y.

#include <utility>

#include "wedgemap/exterior.hpp"
#include "wedgemap/intlin.hpp"

namespace wedgemap {

/// Unique x in [0, |y|) with p_i * x == q_i (mod y) for all i.
/// Requires gcd(y, p) = 1 and all minors p_i q_j - p_j q_i divisible by y.
Integer cox_solve(std::span<const Integer> p, std::span<const Integer> q, const Integer& y);

struct Rank2Options {
  /// Reduce the second coordinate of the first vector into [0, |y_2|).
  /// When false the raw Bezout combination is kept.
  bool reduce_second = true;
};

struct Rank2Inversion {
  VectorSystem system;  // n x 2, columns x and y
  std::pair<int, int> pivot;  // 1-based (i, j) with Y_ij != 0
  BezoutResult bezout;  // gcd of the pivot row, in permuted coordinates
};

/// Preimage of a nonzero grade-2 vector satisfying the Plücker relations,
/// using a single gcd computation along the pivot row.
Rank2Inversion invert_rank2(const PluckerVector& Y, Rank2Options opts = {});

/// Preimage of a nonzero grade n-1 vector via an integer kernel basis.
VectorSystem invert_codim1(const PluckerVector& Y);

/// Given W (n x k, k < n - k) with nonzero wedge, n - k vectors whose wedge is
/// exactly hat(wedge(W)).
VectorSystem invert_complement(const VectorSystem& W);

/// Dispatches on the grade: k in {1, 2, n-2, n-1, n}.
VectorSystem invert(const PluckerVector& Y);

/// Integral k x k matrix H with A * H = E and det H = t, where
/// wedge(E) = t * wedge(A) and wedge(A) is primitive.
IntMatrix transition_matrix(const VectorSystem& A, const VectorSystem& E);

}  // namespace wedgemap
