#include "masslin/invariant.hpp"

namespace masslin {

InvariantReport characteristic_number(const HalfSpaceSystem& sys,
                                      const IntVector& b, bool formal) {
  if (b.dim() != sys.dim())
    throw DimensionError("characteristic_number: b dimension mismatch");
  const DelzantVerdict dz = is_delzant(sys);
  if (!dz.ok && !formal)
    throw NotDelzantError("characteristic_number: " + dz.diagnostic);

  const std::size_t n = sys.dim();
  InvariantReport rep;
  rep.formal = !dz.ok;
  rep.cm = center_of_mass(sys);
  rep.cm_dot_b = dot(b, rep.cm);

  const Rational fac(factorial(static_cast<unsigned>(n - 1)));
  Rational sum(0);
  rep.facet_terms.reserve(sys.facet_count());
  for (std::size_t j = 0; j < sys.facet_count(); ++j) {
    const MomentData fm = facet_lattice_moments(sys, j, 1);
    FacetTerm t;
    t.facet = j;
    t.Phi = fac * fm.volume;
    t.PhiPrime = fac * dot(b, fm.first);
    t.term = rep.cm_dot_b * t.Phi - t.PhiPrime;
    sum += t.term;
    rep.facet_terms.push_back(std::move(t));
  }
  rep.value = Rational(static_cast<long>(n)) * sum;
  rep.infinite_order_flag = !rep.value.is_zero();
  return rep;
}

Rational normalized_hamiltonian_offset(const HalfSpaceSystem& sys,
                                       const IntVector& b) {
  if (b.dim() != sys.dim())
    throw DimensionError("normalized_hamiltonian_offset: b dimension mismatch");
  const DelzantVerdict dz = is_delzant(sys);
  if (!dz.ok)
    throw NotDelzantError("normalized_hamiltonian_offset: " + dz.diagnostic);
  return -dot(b, center_of_mass(sys));
}

bool check_translation_invariance(const HalfSpaceSystem& sys,
                                  const IntVector& b, const RatVector& a) {
  const HalfSpaceSystem moved = sys.with_offsets(translate_offsets(sys, a));
  return characteristic_number(moved, b).value ==
         characteristic_number(sys, b).value;
}

bool check_additivity_in_b(const HalfSpaceSystem& sys, const IntVector& b1,
                           const IntVector& b2) {
  if (b1.dim() != b2.dim())
    throw DimensionError("check_additivity_in_b: b dimension mismatch");
  IntVector sum(b1.dim());
  for (std::size_t i = 0; i < b1.dim(); ++i) sum[i] = b1[i] + b2[i];
  return characteristic_number(sys, sum).value ==
         characteristic_number(sys, b1).value +
             characteristic_number(sys, b2).value;
}

bool check_scaling_homogeneity(const HalfSpaceSystem& sys, const IntVector& b,
                               const Rational& s) {
  if (s.sign() <= 0)
    throw DomainError("check_scaling_homogeneity: scale must be positive");
  RatVector scaled = sys.offsets();
  scaled *= s;
  const HalfSpaceSystem sys2 = sys.with_offsets(std::move(scaled));
  return characteristic_number(sys2, b).value ==
         s.pow(static_cast<unsigned long>(sys.dim())) *
             characteristic_number(sys, b).value;
}

}  // namespace masslin
