#include "masslin/linalg.hpp"

#include <algorithm>

namespace masslin {

IntVector::IntVector(std::initializer_list<long> xs) {
  e.reserve(xs.size());
  for (long x : xs) e.emplace_back(x);
}

bool IntVector::is_zero() const {
  return std::all_of(e.begin(), e.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

IntVector IntVector::operator-() const {
  IntVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = -e[i];
  return r;
}

RatVector::RatVector(const IntVector& v) {
  e.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e.emplace_back(v[i]);
}

bool RatVector::is_zero() const {
  return std::all_of(e.begin(), e.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

RatVector& RatVector::operator+=(const RatVector& o) {
  if (dim() != o.dim()) throw DimensionError("vector add: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) e[i] += o[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
  if (dim() != o.dim()) throw DimensionError("vector sub: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) e[i] -= o[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& x : e) x *= s;
  return *this;
}

RatVector RatVector::operator-() const {
  RatVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = -e[i];
  return r;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.dim() < b.dim();
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(rows.size(), rows[0].dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != m.cols())
      throw DimensionError("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<IntVector>& rows) {
  std::vector<RatVector> rr;
  rr.reserve(rows.size());
  for (const auto& r : rows) rr.emplace_back(r);
  return from_rows(rr);
}

RatVector RatMatrix::row(std::size_t i) const {
  RatVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot: dimension mismatch");
  Integer s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Clears denominators row by row; returns the product of the row scales.
// M[i][j] = m[i][j] * scale_i with scale_i = lcm of row i denominators.
Integer scale_rows_to_integers(const RatMatrix& m,
                               std::vector<std::vector<Integer>>& M) {
  Integer total(1);
  M.assign(m.rows(), std::vector<Integer>(m.cols(), Integer(0)));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      M[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    total *= l;
  }
  return total;
}

// Fraction-free forward elimination in place. Returns the permutation
// sign, or 0 when a zero pivot column is found within the first
// `pivot_cols` columns. Entries stay integers throughout (Bareiss).
int bareiss_forward(std::vector<std::vector<Integer>>& M,
                    std::size_t pivot_cols) {
  const std::size_t rows = M.size();
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k < pivot_cols; ++k) {
    std::size_t piv = k;
    while (piv < rows && sgn(M[piv][k]) == 0) ++piv;
    if (piv == rows) return 0;
    if (piv != k) {
      std::swap(M[piv], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < M[i].size(); ++j) {
        Integer t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<std::vector<Integer>> M;
  const Integer scale = scale_rows_to_integers(m, M);
  const int sign = bareiss_forward(M, n - 1);
  if (sign == 0) return Rational(0);
  Integer det = M[n - 1][n - 1];
  // The final pivot after full forward elimination is det(M).
  if (sgn(det) == 0) return Rational(0);
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs) {
  if (m.rows() != m.cols()) throw DimensionError("solve: matrix not square");
  if (rhs.dim() != m.rows()) throw DimensionError("solve: rhs dimension");
  const std::size_t n = m.rows();
  if (n == 0) return RatVector(0);

  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n) = rhs[i];
  }
  std::vector<std::vector<Integer>> M;
  scale_rows_to_integers(aug, M);
  if (bareiss_forward(M, n) == 0) return std::nullopt;

  // Back substitution on the integer upper-triangular system.
  RatVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(M[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(M[ii][j]) * x[j];
    x[ii] = acc / Rational(M[ii][ii]);
  }
  return x;
}

IntVector primitive(const IntVector& v) {
  if (v.is_zero()) throw DomainError("primitive: zero vector");
  Integer g(0);
  for (const auto& x : v.e)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

RatMatrix rref(RatMatrix m, std::size_t* out_rank) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    const Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  if (out_rank) *out_rank = r;
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::size_t r = 0;
  rref(m, &r);
  return r;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  std::size_t r = 0;
  const RatMatrix R = rref(m, &r);
  const std::size_t n = m.cols();

  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0, c = 0; i < r; ++i) {
    while (c < n && R.at(i, c).is_zero()) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -R.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace masslin
