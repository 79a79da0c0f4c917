#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "masslin/linalg.hpp"

namespace masslin {

/// Univariate polynomial with exact rational coefficients, c[i] the
/// coefficient of x^i. Trailing zero coefficients are trimmed, so the
/// zero polynomial has an empty coefficient list and degree -1.
struct RatPoly {
  std::vector<Rational> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rational eval(const Rational& x) const;
  void trim();

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
};

/// The unique polynomial of degree < points.size() through the given
/// (x, y) points (Newton form, exact). x values must be distinct.
RatPoly lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& points);

/// A reduced rational function P/Q with Q not identically zero.
struct RatFunction {
  RatPoly num;
  RatPoly den;

  Rational eval(const Rational& x) const;
};

/// Reconstructs the minimal-degree rational function P/Q with
/// deg P <= max_num_degree, deg Q <= max_den_degree matching every
/// sample exactly (Cauchy interpolation). Searches degree pairs in
/// increasing total degree, solves the homogeneous linear system
/// P(x_i) - y_i Q(x_i) = 0 over all samples, and validates the
/// candidate on every sample. Returns nullopt when no pair within the
/// bounds fits. Sample x values must be distinct and sample count must
/// exceed max_num_degree + max_den_degree + 1.
std::optional<RatFunction> reconstruct_rational_function(
    const std::vector<std::pair<Rational, Rational>>& samples,
    unsigned max_num_degree, unsigned max_den_degree);

/// First `count` Taylor coefficients of P/Q at 0 by exact power-series
/// division. Throws DomainError when Q(0) = 0.
std::vector<Rational> taylor_coefficients(const RatFunction& f,
                                          std::size_t count);

}  // namespace masslin
