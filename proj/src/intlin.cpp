#include "wedgemap/intlin.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "wedgemap/errors.hpp"

namespace wedgemap {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix literal");
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns) {
  const std::size_t k = columns.size();
  const std::size_t n = k ? columns[0].size() : 0;
  IntMatrix m(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].size() != n) throw InputError("columns of unequal length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::initializer_list<IntVector> columns) {
  return from_columns(std::span<const IntVector>(columns.begin(), columns.size()));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, const IntVector& v) {
  if (v.size() != rows_) throw InputError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const int> row_idx,
                               std::span<const int> col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s(i, j) = (*this)(static_cast<std::size_t>(row_idx[i]),
                        static_cast<std::size_t>(col_idx[j]));
  return s;
}

IntMatrix IntMatrix::column_slice(std::size_t first, std::size_t count) const {
  IntMatrix s(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) s(i, j) = (*this)(i, first + j);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Integer& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

namespace {

// q, r with a = q*b + r and 0 <= r < |b|.
void euclid_divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  Integer abs_b = abs(b);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), abs_b.get_mpz_t());
  q = (a - r) / b;
}

}  // namespace

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  Integer r0 = a, r1 = b;
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  Integer q, r;
  while (r1 != 0) {
    euclid_divmod(r0, r1, q, r);
    Integer s = s0 - q * s1;
    Integer t = t0 - q * t1;
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s);
    t0 = std::exchange(t1, t);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

BezoutResult multi_gcd_bezout(std::span<const Integer> v) {
  BezoutResult out{0, IntVector(v.size(), Integer(0))};
  for (std::size_t i = 0; i < v.size(); ++i) {
    ExtGcd e = ext_gcd(out.g, v[i]);
    for (std::size_t j = 0; j < i; ++j) out.coeffs[j] *= e.u;
    out.coeffs[i] = e.v;
    out.g = e.g;
  }
  return out;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

namespace {

// Replace columns (p, q) of M by (u*Mp + v*Mq, s*Mp + t*Mq).
void combine_columns(IntMatrix& M, std::size_t p, std::size_t q, const Integer& u,
                     const Integer& v, const Integer& s, const Integer& t) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Integer mp = M(i, p);
    Integer mq = M(i, q);
    M(i, p) = u * mp + v * mq;
    M(i, q) = s * mp + t * mq;
  }
}

void axpy_column(IntMatrix& M, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += f * M(i, src);
}

}  // namespace

HermiteForm hnf(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(n);

  // Pivot columns are first accumulated at the front, then rotated behind the
  // zero columns at the end.
  std::size_t col = 0;
  for (std::size_t i = 0; i < m && col < n; ++i) {
    for (std::size_t c = col + 1; c < n; ++c) {
      if (H(i, c) == 0) continue;
      const Integer a = H(i, col);
      const Integer b = H(i, c);
      ExtGcd e = ext_gcd(a, b);
      Integer s = -b / e.g;
      Integer t = a / e.g;
      combine_columns(H, col, c, e.u, e.v, s, t);
      combine_columns(U, col, c, e.u, e.v, s, t);
    }
    if (H(i, col) == 0) continue;
    if (H(i, col) < 0) {
      H.negate_column(col);
      U.negate_column(col);
    }
    const Integer pivot = H(i, col);
    for (std::size_t j = 0; j < col; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      axpy_column(H, j, col, -q);
      axpy_column(U, j, col, -q);
    }
    ++col;
  }

  const std::size_t rank = col;
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t j = rank; j < n; ++j) order.push_back(j);
  for (std::size_t j = 0; j < rank; ++j) order.push_back(j);

  HermiteForm out{IntMatrix(m, n), IntMatrix(n, n), rank};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) out.H(i, j) = H(i, order[j]);
    for (std::size_t i = 0; i < n; ++i) out.U(i, j) = U(i, order[j]);
  }
  return out;
}

IntMatrix kernel_basis(const IntMatrix& A) {
  HermiteForm h = hnf(A);
  return h.U.column_slice(0, A.cols() - h.rank);
}

Integer det(const IntMatrix& A) {
  if (!A.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

bool is_hermite_normal_form(const IntMatrix& H) {
  const std::size_t m = H.rows();
  const std::size_t n = H.cols();
  auto pivot_row = [&](std::size_t j) -> std::size_t {
    for (std::size_t i = 0; i < m; ++i)
      if (H(i, j) != 0) return i;
    return m;
  };
  std::size_t j = 0;
  while (j < n && pivot_row(j) == m) ++j;
  std::vector<std::size_t> pivot_cols;
  std::size_t last = 0;
  for (; j < n; ++j) {
    std::size_t p = pivot_row(j);
    if (p == m) return false;
    if (!pivot_cols.empty() && p <= last) return false;
    if (H(p, j) <= 0) return false;
    for (std::size_t left : pivot_cols)
      if (H(p, left) < 0 || H(p, left) >= H(p, j)) return false;
    pivot_cols.push_back(j);
    last = p;
  }
  return true;
}

}  // namespace wedgemap
