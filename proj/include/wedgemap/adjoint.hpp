#pragma once

// The k-adjoint of an n-ary form and the induced norm on decomposable
// vectors: det(X^T A X) equals x^T Â x where x is the wedge of the columns.

#include "wedgemap/exterior.hpp"
#include "wedgemap/intlin.hpp"

namespace wedgemap {

/// Matrix of k x k minors Â_{IJ} = det A[I, J], indexed by k-subsets in lex
/// order.
IntMatrix k_adjoint(const IntMatrix& A, int k);

/// det(X^T A Y).
Integer pairing_A(const VectorSystem& X, const VectorSystem& Y, const IntMatrix& A);

/// x^T Â y on Plücker coordinates of equal grade.
Integer adjoint_pairing(const PluckerVector& x, const PluckerVector& y, const IntMatrix& A_hat);

/// X^T A X.
IntMatrix gram(const VectorSystem& X, const IntMatrix& A);

bool is_symmetric(const IntMatrix& A);
/// Sylvester's criterion on the leading principal minors.
bool is_positive_definite(const IntMatrix& A);

/// Gram matrix of the sublattice spanned by any preimage of x, so that
/// det(result) = x^T Â x. Unique up to SL_k congruence.
IntMatrix represent_norm(const PluckerVector& x, const IntMatrix& A);

}  // namespace wedgemap
