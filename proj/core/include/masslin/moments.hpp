#pragma once

#include <optional>
#include <vector>

#include "masslin/polytope.hpp"

namespace masslin {

/// A d-simplex embedded in ambient dimension n. Chamber pieces have
/// d = n; facet pieces have d = n-1 and carry the facet's primitive
/// outward conormal, which fixes the lattice normalization.
struct EmbeddedSimplex {
  std::size_t d;
  std::vector<RatVector> vertices;  // d+1 affinely independent points
  std::optional<IntVector> normal;  // present iff d = n-1
};

/// Exact moments of a region up to degree 2. For facet regions the
/// measure is lattice-normalized: Euclidean (n-1)-measure divided by
/// the Euclidean norm of the primitive conormal. `second` is present
/// only when degree 2 was requested.
struct MomentData {
  std::size_t d = 0;
  Rational volume;
  RatVector first;
  std::optional<RatMatrix> second;
};

/// Triangulates the polytope into full-dimensional simplices by coning
/// the lexicographically smallest vertex of each face over the face's
/// own facets, recursively. Deterministic; pieces overlap in measure
/// zero and cover the polytope.
std::vector<EmbeddedSimplex> triangulate(const HalfSpaceSystem& sys);

/// Moments of one simplex: volume, first moments (volume times
/// centroid), degree-2 moments by the symmetric vertex-sum formula.
/// degree selects how much is computed (second present iff degree 2).
MomentData simplex_moments(const EmbeddedSimplex& s, int degree);

/// Sum of simplex moments over triangulate(sys).
MomentData polytope_moments(const HalfSpaceSystem& sys, int degree);

/// Lattice-normalized moments of facet j, computed from a deterministic
/// triangulation of the facet. Throws GeometryError when the facet is
/// empty or lower-dimensional.
MomentData facet_lattice_moments(const HalfSpaceSystem& sys, std::size_t j,
                                 int degree);

/// First moments divided by volume.
RatVector center_of_mass(const HalfSpaceSystem& sys);

/// Facet first moments divided by facet volume. The lattice
/// normalization cancels in the ratio.
RatVector facet_center_of_mass(const HalfSpaceSystem& sys, std::size_t j);

namespace detail {
/// Base-vertex policy for triangulation; the default picks the
/// lexicographically smallest vertex of each face. Exposed so tests can
/// verify base-independence of summed moments.
enum class BaseVertexPolicy { LexSmallest, LexLargest };
std::vector<EmbeddedSimplex> triangulate_with_policy(const HalfSpaceSystem& sys,
                                                     BaseVertexPolicy policy);
}  // namespace detail

}  // namespace masslin
