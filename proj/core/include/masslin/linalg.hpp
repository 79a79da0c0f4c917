#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "masslin/rational.hpp"

namespace masslin {

/// Dense vector of arbitrary-precision integers.
struct IntVector {
  std::vector<Integer> e;

  IntVector() = default;
  explicit IntVector(std::size_t n) : e(n, Integer(0)) {}
  IntVector(std::initializer_list<long> xs);

  std::size_t dim() const { return e.size(); }
  Integer& operator[](std::size_t i) { return e[i]; }
  const Integer& operator[](std::size_t i) const { return e[i]; }
  bool is_zero() const;

  IntVector operator-() const;
  friend bool operator==(const IntVector&, const IntVector&) = default;
};

/// Dense vector of exact rationals.
struct RatVector {
  std::vector<Rational> e;

  RatVector() = default;
  explicit RatVector(std::size_t n) : e(n, Rational(0)) {}
  RatVector(std::initializer_list<Rational> xs) : e(xs) {}
  explicit RatVector(const IntVector& v);

  std::size_t dim() const { return e.size(); }
  Rational& operator[](std::size_t i) { return e[i]; }
  const Rational& operator[](std::size_t i) const { return e[i]; }
  bool is_zero() const;

  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  RatVector& operator*=(const Rational& s);
  RatVector operator-() const;
  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(RatVector a, const Rational& s) { return a *= s; }
  friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
  friend bool operator==(const RatVector&, const RatVector&) = default;
};

/// Strict lexicographic order; used to canonicalize vertex lists.
bool lex_less(const RatVector& a, const RatVector& b);

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);
  /// Stacks the given vectors as matrix rows (all must share a dimension).
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  RatVector row(std::size_t i) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);
inline Rational dot(const RatVector& a, const IntVector& b) {
  return dot(b, a);
}
Integer dot(const IntVector& a, const IntVector& b);

/// Exact determinant via fraction-free (Bareiss) elimination on an
/// integer row-scaled copy. Throws DimensionError on non-square input.
Rational determinant(const RatMatrix& m);

/// Unique exact solution of m x = rhs when m is nonsingular; nullopt when
/// singular. Throws DimensionError on shape mismatch.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs);

/// v divided by the gcd of its entries, sign preserved.
/// Throws DomainError on the zero vector.
IntVector primitive(const IntVector& v);

/// Row rank over the rationals.
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form; optionally reports the rank.
RatMatrix rref(RatMatrix m, std::size_t* out_rank = nullptr);

/// Basis of the right kernel {x : m x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m);

}  // namespace masslin
