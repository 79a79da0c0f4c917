#pragma once

#include <map>
#include <optional>
#include <utility>

#include "masslin/fit.hpp"
#include "masslin/invariant.hpp"

namespace masslin {

/// Sampling budget for chamber-wide decisions. validation_points = 0
/// requests the default grid of (n+3)*m points; all sampling is
/// deterministic in the seed.
struct SamplingConfig {
  unsigned long seed = 0;
  std::size_t validation_points = 0;
};

/// Outcome of the mass-linearity decision. When linear, `coefficients`
/// holds gamma with <Cm(k), b> = sum_j gamma_j k_j on every sampled
/// chamber point. When not, `witness` is an offset vector where the
/// best linear fit fails exactly. grid_size records the evidence grid.
struct LinearityVerdict {
  bool linear = false;
  std::optional<RatVector> coefficients;
  std::optional<RatVector> witness;
  std::size_t grid_size = 0;
};

/// Homogeneous polynomial in the m offsets: exponent vector -> nonzero
/// coefficient. Produced by exact interpolation over chamber samples.
struct ChamberPolynomial {
  std::size_t vars = 0;
  unsigned degree = 0;
  std::map<std::vector<unsigned>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  Rational evaluate(const RatVector& k) const;
};

/// Decides whether k -> <Cm(k), b> is linear on the chamber: fits gamma
/// from an affine frame (reference plus one step per coordinate),
/// requires the fit to reproduce the reference value (a nonzero affine
/// constant fails here), then validates on a seeded chamber grid of at
/// least (n+3)*m points. The verdict is exact on the sampled evidence.
LinearityVerdict is_mass_linear(const Chamber& ch, const IntVector& b,
                                const SamplingConfig& cfg = {});

/// Interpolates I(k; b) as the homogeneous degree-n polynomial in the m
/// offsets through a rank-complete chamber sample, then verifies exact
/// agreement on held-out samples. Requires a mass linear pair
/// (DomainError otherwise); held-out mismatch raises ConsistencyError.
ChamberPolynomial interpolate_invariant(const Chamber& ch, const IntVector& b,
                                        const SamplingConfig& cfg = {});

/// For an antipodal facet pair (conormal of `wall_a` equal to the
/// negation of conormal of `wall_i`), restricts I to the line in the
/// chamber along which the slab width w = k_a + k_i shrinks to 0 with
/// all other offsets fixed, interpolates the restriction as a
/// univariate polynomial, and returns true iff it vanishes at w = 0.
/// Under the outward-conormal convention w = 0 is the locus where the
/// slab collapses. Requires a mass linear pair.
bool check_slab_divisibility(const Chamber& ch, const IntVector& b,
                             std::pair<std::size_t, std::size_t> slab);

/// The fitted gamma of a mass linear pair, in the chamber's canonical
/// facet order. Throws DomainError when the pair is not mass linear.
RatVector mass_linear_coefficients(const Chamber& ch, const IntVector& b,
                                   const SamplingConfig& cfg = {});

/// All exponent vectors of total degree `degree` in `vars` variables,
/// lexicographically ordered. Exposed for tests.
std::vector<std::vector<unsigned>> homogeneous_exponents(std::size_t vars,
                                                         unsigned degree);

}  // namespace masslin
