#pragma once

#include "masslin/polytope.hpp"

namespace masslin {

/// Delta_p bundle over Delta_1 in R^{p+1}: conormals -e_1..-e_p,
/// e_1+...+e_p, -e_{p+1}, e_{p+1}-sum a_i e_i with offsets
/// (0,...,0,tau,0,lambda). The twisting a is an integer vector of
/// length p; p >= 2 throughout (the p=1 trapezoid has its own
/// constructors below).
struct DeltaPBundleSpec {
  std::size_t p = 2;
  IntVector a;
  Rational lambda;
  Rational tau;

  Integer A() const;  // sum of the twisting integers
};

/// The parameter-domain condition for the bundle family admits two
/// readings: the offset inequality lambda + a_i > 0 and the ceiling
/// height inequality lambda + a_i*tau > 0 (the heights of the ceiling
/// vertices above the base). Geometry is the arbiter: `geometric`
/// records whether the constructed system is a bounded simple polytope
/// with the full prism vertex count 2(p+1). `consistent` is true when
/// both readings agree with the geometric verdict.
struct BundleParameterReadings {
  bool offset_inequality = false;
  bool height_inequality = false;
  bool geometric = false;

  bool consistent() const {
    return offset_inequality == geometric && height_inequality == geometric;
  }
};

/// Builds the bundle polytope. Throws DomainError for invalid
/// parameters (p < 2, wrong a length, nonpositive lambda or tau) and
/// GeometryError when the feasible set is degenerate or not simple.
HalfSpaceSystem make_delta_p_bundle(const DeltaPBundleSpec& spec);

/// Z(b) = (p+1) * (a . (2*bhat + b_last*a)) - A * (2*B + b_last*A),
/// with bhat the first p entries, B their sum. Constant on the chamber;
/// vanishes exactly on the mass linear directions.
Rational bundle_Z(const DeltaPBundleSpec& spec, const IntVector& b);

/// K(lambda, tau) = tau^{p+1}/(p+2) * (tau/(lambda(p+1)+tau*A) - 1).
/// Throws DomainError when the denominator lambda(p+1)+tau*A vanishes.
Rational bundle_K(const DeltaPBundleSpec& spec);

/// <Cm(Delta), b> in closed form (the bhat and bdot contributions
/// summed). Subject to the same denominator condition as bundle_K.
Rational bundle_cm(const DeltaPBundleSpec& spec, const IntVector& b);

/// I(lambda, tau; b) = K(lambda, tau) * Z(b).
Rational bundle_invariant(const DeltaPBundleSpec& spec, const IntVector& b);

/// Evaluates both parameter-domain readings and the geometric verdict.
/// Never throws for nonpositive heights; construction failures count
/// as geometric = false.
BundleParameterReadings bundle_parameter_readings(const DeltaPBundleSpec& spec);

/// Hirzebruch trapezoid: facets x1 >= 0, x2 >= 0, x2 <= lambda,
/// x1 + k*x2 <= tau, i.e. vertices (0,0), (0,lambda), (tau,0),
/// (sigma,lambda) with sigma = tau - k*lambda > 0.
struct HirzebruchSpec {
  long k = 1;
  Rational tau;
  Rational lambda;

  Rational sigma() const { return tau - Rational(k) * lambda; }
};

/// Builds the trapezoid in the facet order stated above.
/// Throws DomainError for k < 1 or nonpositive parameters,
/// GeometryError when sigma <= 0.
HalfSpaceSystem make_hirzebruch(const HirzebruchSpec& spec);

/// Mass linearity criterion for the trapezoid: 2*b2 == k*b1.
bool hirzebruch_mass_linear(long k, const IntVector& b);

/// Cm(Delta) = ( (3 tau^2 - 3 k tau lambda + k^2 lambda^2),
///               (3 lambda tau - 2 k lambda^2) ) / (3 (2 tau - k lambda)).
RatVector hirzebruch_cm(const HirzebruchSpec& spec);

/// Closed form for I(k; b) on the trapezoid:
/// I(k; (1,0)) = k^2 lambda^2 ((k+1) lambda - 2 tau) / (3 (2 tau - k lambda))
/// extended by the loop relation I(k; b) = (b1 - 2 b2 / k) * I(k; (1,0)).
Rational hirzebruch_invariant(const HirzebruchSpec& spec, const IntVector& b);

/// Checks the loop relation against the generic engine: true iff
/// characteristic_number(sys, b) equals (b1 - 2 b2/k) times
/// characteristic_number(sys, (1,0)), exactly.
bool hirzebruch_loop_ratio_check(const HirzebruchSpec& spec,
                                 const IntVector& b);

/// The simplex S_n(tau) truncated by the ceiling x_n <= lambda.
/// Facet order: F_1..F_n are x_j >= 0, F_{n+1} is the ceiling,
/// F_{n+2} is the slant x_1+...+x_n <= tau. sigma = tau - lambda > 0.
struct TruncatedSimplexSpec {
  std::size_t n = 2;
  Rational tau;
  Rational lambda;

  Rational sigma() const { return tau - lambda; }
  Rational epsilon() const;  // sigma/tau
};

/// Builds the truncated simplex. Throws DomainError for n < 2 or
/// nonpositive parameters, GeometryError when sigma <= 0.
HalfSpaceSystem make_truncated_simplex(const TruncatedSimplexSpec& spec);

/// Mass linearity criterion: n * b_n == b_1 + ... + b_{n-1}.
bool truncated_mass_linear(std::size_t n, const IntVector& b);

/// Cm(Delta) = ((tau^{n+1}-sigma^{n+1})/(n+1) * w - lambda sigma^n e_n)
///             / (tau^n - sigma^n), with w = (1,...,1).
RatVector truncated_cm(const TruncatedSimplexSpec& spec);

/// Closed form I = n (<Cm,b> * sum Phi_j - sum Phi'_j) assembled from
/// the facet sums sum Phi = (n+1) tau^{n-1} + (1-n) sigma^{n-1} and the
/// bhat/bdot splittings of sum Phi'.
Rational truncated_invariant(const TruncatedSimplexSpec& spec,
                             const IntVector& b);

/// The exact coefficient of eps^{n-1} (eps = sigma/tau) in I(tau,
/// lambda; b): n! (n b_n - sum_{j<n} b_j) tau^n / ((n+1)(n-2)!).
/// Throws DomainError for n < 3; at n = 2 compare expansions directly.
Rational truncated_leading_coefficient(std::size_t n, const Rational& tau,
                                       const IntVector& b);

/// True iff the generic engine returns I == 0 on S_n(tau) for this b.
bool simplex_invariant_zero_check(std::size_t n, const Rational& tau,
                                  const IntVector& b);

/// The standard simplex S_n(tau): x_j >= 0, x_1+...+x_n <= tau.
HalfSpaceSystem make_simplex(std::size_t n, const Rational& tau);

/// The scaled simplex S_n(c, tau): x_j >= 0, sum c_j x_j <= tau with
/// positive rational weights c. The slant constraint is cleared to a
/// primitive integer conormal; the feasible set is unchanged.
HalfSpaceSystem make_scaled_simplex(const std::vector<Rational>& c,
                                    const Rational& tau);

}  // namespace masslin
