#pragma once

#include <string>
#include <vector>

namespace masslin {

/// One verification check: a named batch of exact-equality cases.
/// On failure `detail` pinpoints the first failing case; on success it
/// records the case count.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// A named group of checks.
struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  bool all_passed() const { return passed() == checks.size(); }
};

/// Simplex moment identities: S_n(tau) volumes and first/second
/// moments against the closed forms, and the weighted simplex
/// S_n(c, tau) volume/first-moment products on random positive c.
SuiteResult verify_lemma_moments();

/// Bundle family: chamber membership of the parameter grid, engine
/// invariant equal to K*Z, and engine <Cm,b> equal to the closed form,
/// across all twisting vectors, grid points, and directions.
SuiteResult verify_bundle_factorization();

/// Bundle family: is_mass_linear == (Z(b) == 0); mass linear pairs
/// interpolate to the zero polynomial and vanish on the grid;
/// non mass linear pairs are nonzero on the grid.
SuiteResult verify_bundle_mass_linear();

/// Hirzebruch trapezoid: center-of-mass closed form, loop ratio
/// relations, closed-form invariant, Delzant sweep, and the
/// mass-linearity equivalence 2 b2 = k b1 <=> I == 0 on the grid.
SuiteResult verify_hirzebruch();

/// Truncated simplex: closed-form invariant and center of mass,
/// mass-linearity equivalence, vanishing on the full simplex,
/// leading epsilon-coefficient by rational-function reconstruction,
/// and the n = 3 loop ratios.
SuiteResult verify_truncated_simplex();

/// Structural identities on all family instances: translation
/// invariance, additivity in b, scaling homogeneity, the Minkowski
/// facet-closure identity, and slab divisibility for mass linear
/// pairs with antipodal facets.
SuiteResult verify_structural();

/// Truncated simplex at n = 2 versus the k = 1 trapezoid: identical
/// systems, equal invariants, agreeing criteria, and invariance of I
/// under the coordinate swap applied to both polytope and direction.
SuiteResult verify_cross_family();

/// Suite names accepted by run_verification, in canonical order.
const std::vector<std::string>& verification_suite_names();

/// Runs a suite by name. "all" runs every suite; "equivalences" runs
/// the three mass-linearity equivalence suites (bundle, hirzebruch,
/// truncated-simplex). Throws ParseError for unknown names.
std::vector<SuiteResult> run_verification(const std::string& name);

}  // namespace masslin
