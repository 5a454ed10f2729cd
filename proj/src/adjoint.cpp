#include "wedgemap/adjoint.hpp"

#include <numeric>

#include "wedgemap/errors.hpp"
#include "wedgemap/inversion.hpp"

namespace wedgemap {

IntMatrix k_adjoint(const IntMatrix& A, int k) {
  if (!A.is_square()) throw InputError("adjoint needs a square matrix");
  const int n = static_cast<int>(A.rows());
  if (k < 1 || k > n) throw InputError("adjoint grade must satisfy 1 <= k <= n");
  const auto subsets = lex_subsets(n, k);
  IntMatrix out(subsets.size(), subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      out(i, j) = det(A.submatrix(subsets[i].elements(), subsets[j].elements()));
  return out;
}

Integer pairing_A(const VectorSystem& X, const VectorSystem& Y, const IntMatrix& A) {
  if (!A.is_square() || X.rows() != A.rows() || Y.rows() != A.rows() || X.cols() != Y.cols())
    throw InputError("pairing needs n x k systems and an n x n matrix");
  return det(X.transpose() * A * Y);
}

Integer adjoint_pairing(const PluckerVector& x, const PluckerVector& y, const IntMatrix& A_hat) {
  if (x.n != y.n || x.k != y.k || A_hat.rows() != x.coords.size() ||
      A_hat.cols() != y.coords.size())
    throw InputError("adjoint pairing shape mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < y.coords.size(); ++j) row += A_hat(i, j) * y.coords[j];
    s += x.coords[i] * row;
  }
  return s;
}

IntMatrix gram(const VectorSystem& X, const IntMatrix& A) {
  if (!A.is_square() || X.rows() != A.rows()) throw InputError("gram needs an n x k system and an n x n matrix");
  if (!is_symmetric(A)) throw InputError("gram needs a symmetric matrix");
  return X.transpose() * A * X;
}

bool is_symmetric(const IntMatrix& A) { return A.is_square() && A == A.transpose(); }

bool is_positive_definite(const IntMatrix& A) {
  if (!is_symmetric(A)) return false;
  for (std::size_t m = 1; m <= A.rows(); ++m) {
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    if (det(A.submatrix(idx, idx)) <= 0) return false;
  }
  return true;
}

IntMatrix represent_norm(const PluckerVector& x, const IntMatrix& A) {
  if (!A.is_square() || static_cast<int>(A.rows()) != x.n)
    throw InputError("matrix size does not match the ambient dimension");
  if (!is_positive_definite(A))
    throw MathError(Reason::NotDefinite, "matrix is not symmetric positive definite");
  IntMatrix G = gram(invert(x), A);
  if (det(G) != adjoint_pairing(x, x, k_adjoint(A, x.k)))
    throw MathError(Reason::Internal, "Gram determinant differs from the adjoint norm");
  return G;
}

}  // namespace wedgemap
