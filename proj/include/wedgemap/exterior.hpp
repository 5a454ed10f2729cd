#pragma once

// Plücker coordinates on the k-th exterior power of Z^n. Coordinates are
// indexed by k-subsets of {1..n} in lexicographic order.

#include <array>
#include <cstddef>
#include <vector>

#include "wedgemap/intlin.hpp"

namespace wedgemap {

/// A k-subset of {0..n-1}, stored 0-based and strictly increasing. The
/// weight uses 1-based positions, so that weight({0, 1}) = 1 + 2.
class SubsetIndex {
 public:
  SubsetIndex(int n, std::vector<int> elements);

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const noexcept { return elements_; }
  long weight() const noexcept;
  SubsetIndex complement() const;

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

 private:
  int n_;
  std::vector<int> elements_;
};

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<SubsetIndex> lex_subsets(int n, int k);
/// Position of a subset in lex_subsets(n, k).
std::size_t lex_rank(const SubsetIndex& s);
Integer binomial(int n, int k);

/// An element of the k-th exterior power of Z^n.
struct PluckerVector {
  int n = 0;
  int k = 0;
  IntVector coords;

  PluckerVector() = default;
  PluckerVector(int n, int k, IntVector coords);

  const Integer& operator[](const SubsetIndex& s) const { return coords[lex_rank(s)]; }
  bool is_zero() const;

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

/// Columns are the vectors v_1..v_k in Z^n.
using VectorSystem = IntMatrix;

/// Plücker coordinates: the maximal minors of the n x k matrix X.
PluckerVector wedge(const VectorSystem& X);

/// Duality map to grade n - k with hat(Y)_I = (-1)^{weight(I^c)} Y_{I^c}.
PluckerVector hat(const PluckerVector& Y);

/// det(X^T Y) for two n x k systems.
Integer pairing(const VectorSystem& X, const VectorSystem& Y);
/// Euclidean inner product of coordinate vectors of equal grade.
Integer coordinate_pairing(const PluckerVector& a, const PluckerVector& b);

/// det([X | Y]) where X has k columns and Y has n - k.
Integer complementary_det(const VectorSystem& X, const VectorSystem& Y);

/// Sign relating complementary_det to the coordinate pairing of wedge(X)
/// with hat(wedge(Y)): det([X|Y]) = sign * <wedge(X), hat(wedge(Y))>.
int complementary_sign(int n, int k);

struct PluckerViolation {
  std::array<int, 4> quadruple;  // 1-based i < j < k < l
  Integer residue;
};

/// Evaluates every three-term quadratic relation
/// Y_ij Y_kl - Y_ik Y_jl + Y_il Y_jk on a grade-2 vector and returns the
/// quadruples with nonzero residue.
std::vector<PluckerViolation> plucker_check(const PluckerVector& Y);

bool is_primitive(const PluckerVector& Y);

}  // namespace wedgemap
