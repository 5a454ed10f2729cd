#pragma once

// Exact integer linear algebra over GMP integers: extended gcd, column
// Hermite normal form, saturated kernel bases and determinants.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace wedgemap {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix. A matrix with zero columns is allowed so
/// that a full-rank kernel can be represented.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Builds an n x k matrix whose columns are the given vectors.
  static IntMatrix from_columns(std::span<const IntVector> columns);
  static IntMatrix from_columns(std::initializer_list<IntVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  void set_column(std::size_t j, const IntVector& v);
  void negate_column(std::size_t j);

  IntMatrix transpose() const;
  /// Submatrix with the given row and column index lists (0-based).
  IntMatrix submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const;
  /// Columns [first, first + count).
  IntMatrix column_slice(std::size_t first, std::size_t count) const;

  const std::vector<Integer>& entries() const noexcept { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct ExtGcd {
  Integer g;
  Integer u;
  Integer v;
};

/// Extended Euclid with remainders in [0, |divisor|). g >= 0 and u*a + v*b = g.
/// ext_gcd(0, 0) = (0, 0, 0).
ExtGcd ext_gcd(const Integer& a, const Integer& b);

struct BezoutResult {
  Integer g;
  IntVector coeffs;
};

/// Left fold of ext_gcd over the list: sum(coeffs[i] * v[i]) = g >= 0.
BezoutResult multi_gcd_bezout(std::span<const Integer> v);

/// gcd of all entries, 0 for the zero vector.
Integer content(std::span<const Integer> v);

struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

/// Column Hermite normal form H = A * U with U unimodular. Zero columns come
/// first; the remaining rank columns are in column echelon form with strictly
/// increasing pivot rows, positive pivots, and the entries to the left of each
/// pivot (within the pivot columns) reduced into [0, pivot).
HermiteForm hnf(const IntMatrix& A);

/// Saturated basis of {x in Z^n : A x = 0} as the columns of an
/// n x (n - rank) matrix.
IntMatrix kernel_basis(const IntMatrix& A);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& A);

/// True when the matrix is in the shape produced by hnf().
bool is_hermite_normal_form(const IntMatrix& H);

}  // namespace wedgemap
