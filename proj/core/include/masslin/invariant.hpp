#pragma once

#include "masslin/moments.hpp"

namespace masslin {

/// One facet's contribution to the characteristic number.
/// Phi = (n-1)! * lattice facet volume, PhiPrime = (n-1)! * integral of
/// <x, b> over the facet, term = <Cm, b> * Phi - PhiPrime.
struct FacetTerm {
  std::size_t facet;  // 0-based index into the system's facet order
  Rational Phi;
  Rational PhiPrime;
  Rational term;
};

/// Full evaluation record of I(k; b). value = n * sum of facet terms.
/// A nonzero value certifies that the associated loop has infinite
/// order in the Hamiltonian group's fundamental group; the flag records
/// that consequence, nothing topological is computed.
struct InvariantReport {
  RatVector cm;
  Rational cm_dot_b;
  std::vector<FacetTerm> facet_terms;
  Rational value;
  bool infinite_order_flag = false;
  bool formal = false;  // true when the Delzant check was overridden
};

/// Computes I(k; b) = n * sum_j (<Cm, b> Phi_j - PhiPrime_j) from exact
/// facet integrals. Rejects non-Delzant systems with NotDelzantError
/// unless `formal` is set, in which case the same rational formula is
/// evaluated and the report is labeled formal.
InvariantReport characteristic_number(const HalfSpaceSystem& sys,
                                      const IntVector& b, bool formal = false);

/// The constant c with zero polytope average of <x, b> + c, namely
/// -<Cm, b>. Subject to the same Delzant precondition.
Rational normalized_hamiltonian_offset(const HalfSpaceSystem& sys,
                                       const IntVector& b);

/// I(translate_offsets(sys, a); b) == I(sys; b), exactly.
bool check_translation_invariance(const HalfSpaceSystem& sys,
                                  const IntVector& b, const RatVector& a);

/// I(sys; b1 + b2) == I(sys; b1) + I(sys; b2), exactly.
bool check_additivity_in_b(const HalfSpaceSystem& sys, const IntVector& b1,
                           const IntVector& b2);

/// I with offsets s*k equals s^n times I with offsets k, exactly.
/// s must be positive.
bool check_scaling_homogeneity(const HalfSpaceSystem& sys, const IntVector& b,
                               const Rational& s);

}  // namespace masslin
