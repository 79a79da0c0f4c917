#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "masslin/linalg.hpp"

namespace masslin {

/// A polytope vertex: its exact coordinates plus the sorted indices of
/// all facets active (tight) at it. For a simple polytope the active
/// set has exactly n elements.
struct Vertex {
  RatVector point;
  std::vector<std::size_t> active;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// The vertex-facet incidence structure of a simple polytope: one
/// sorted n-subset of facet indices per vertex. Two offset vectors lie
/// in the same chamber exactly when they induce equal incidences.
struct CombinatorialType {
  std::set<std::vector<std::size_t>> incidences;

  friend bool operator==(const CombinatorialType&,
                         const CombinatorialType&) = default;
};

/// A polytope in half-space form {x : <x, n_j> <= k_j, j = 1..m} with
/// outward primitive integer conormals n_j and rational offsets k_j.
/// Construction validates the description: every conormal primitive and
/// nonzero, m >= n+1, feasible set bounded, nonempty, full-dimensional.
/// Vertices are enumerated eagerly and cached in lexicographic order.
class HalfSpaceSystem {
 public:
  HalfSpaceSystem(std::size_t n, std::vector<IntVector> conormals,
                  RatVector offsets, std::vector<std::string> labels = {});

  /// Non-throwing variant: nullopt when the description is degenerate
  /// (unbounded, empty, or lower-dimensional). Dimension and primitivity
  /// violations still throw; they are caller bugs, not geometry.
  static std::optional<HalfSpaceSystem> try_create(
      std::size_t n, std::vector<IntVector> conormals, RatVector offsets,
      std::vector<std::string> labels = {});

  std::size_t dim() const { return n_; }
  std::size_t facet_count() const { return conormals_.size(); }
  const std::vector<IntVector>& conormals() const { return conormals_; }
  const IntVector& conormal(std::size_t j) const { return conormals_[j]; }
  const RatVector& offsets() const { return offsets_; }
  const Rational& offset(std::size_t j) const { return offsets_[j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Cached vertices, sorted lexicographically by point.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// True when every vertex has exactly n active facets.
  bool is_simple() const { return simple_; }

  bool contains(const RatVector& x) const;
  bool strictly_contains(const RatVector& x) const;

  /// Same conormals, new offsets; revalidates.
  HalfSpaceSystem with_offsets(RatVector offsets) const;

 private:
  std::size_t n_;
  std::vector<IntVector> conormals_;
  RatVector offsets_;
  std::vector<std::string> labels_;
  std::vector<Vertex> vertices_;
  bool simple_ = false;
};

/// All vertices of the system (the construction-time cache).
std::vector<Vertex> enumerate_vertices(const HalfSpaceSystem& sys);

/// Result of the Delzant smoothness check. `diagnostic` names the first
/// failing vertex when ok is false.
struct DelzantVerdict {
  bool ok;
  std::string diagnostic;
};

/// True iff every vertex has exactly n active facets whose conormals
/// form a basis of the integer lattice (active determinant is +-1).
DelzantVerdict is_delzant(const HalfSpaceSystem& sys);

/// Vertex-facet incidences of a simple polytope.
/// Throws GeometryError when the polytope is not simple.
CombinatorialType combinatorial_type(const HalfSpaceSystem& sys);

/// A reference system together with its combinatorial type. Membership
/// of other offset vectors is tested against the stored incidences;
/// for simple polytopes vertex incidences determine the chamber.
struct Chamber {
  HalfSpaceSystem reference;
  CombinatorialType ctype;

  explicit Chamber(HalfSpaceSystem ref)
      : reference(std::move(ref)), ctype(combinatorial_type(reference)) {}
};

/// True iff (reference conormals, offsets) is bounded, simple, and has
/// the chamber's combinatorial type. Degenerate candidates yield false.
bool same_chamber(const Chamber& ch, const RatVector& offsets);

/// Offsets of the translated polytope: k'_j = k_j + <a, n_j>.
RatVector translate_offsets(const HalfSpaceSystem& sys, const RatVector& a);

/// Deterministic chamber samples: reference offsets plus small rational
/// perturbations accepted by same_chamber, radius shrinking on retries.
/// Throws SamplingError when the retry budget is exhausted.
std::vector<RatVector> sample_chamber(const Chamber& ch, std::size_t count,
                                      unsigned long seed);

}  // namespace masslin
