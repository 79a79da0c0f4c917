#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "masslin/families.hpp"
#include "masslin/invariant.hpp"
#include "masslin/masslinear.hpp"

namespace masslin {

/// The standard simplex as a named family input.
struct SimplexSpec {
  std::size_t n = 2;
  Rational tau;
};

/// A family named on the command line. Sweeps rebuild the polytope per
/// grid point and compare the engine against the family's closed form.
using FamilySpec = std::variant<DeltaPBundleSpec, HirzebruchSpec,
                                TruncatedSimplexSpec, SimplexSpec>;

/// Parses {"family": "...", ...} JSON. Families: "delta-p-bundle"
/// (p, a, lambda, tau), "hirzebruch" (k, lambda, tau),
/// "truncated-simplex" (n, lambda, tau), "simplex" (n, tau).
/// Rationals are JSON strings in "p/q" form or plain integers.
/// Throws ParseError on malformed input.
FamilySpec parse_family_json(const std::string& text);

/// The family's name string as used in JSON input.
std::string family_name(const FamilySpec& spec);

/// Builds the polytope for the spec (dispatches to the constructors).
HalfSpaceSystem build_family(const FamilySpec& spec);

/// The same family with lambda and tau replaced (sweep grid points).
/// The simplex ignores lambda.
FamilySpec family_with_parameters(const FamilySpec& spec, const Rational& tau,
                                  const Rational& lambda);

/// Closed-form I(tau, lambda; b) for the family, exact.
Rational family_closed_form_invariant(const FamilySpec& spec,
                                      const IntVector& b);

/// Closed-form <Cm, b> for the family, exact.
Rational family_closed_form_cm(const FamilySpec& spec, const IntVector& b);

/// Parses a polytope from JSON: {"n": 2, "conormals": [[-1,0],...],
/// "offsets": ["0", "1/2", ...], "labels": [...]}. Offsets accept
/// integers or "p/q" strings; labels are optional.
/// Throws ParseError on malformed text or wrong shapes; geometric
/// validation errors propagate from the constructor.
HalfSpaceSystem parse_polytope_json(const std::string& text);

/// Serializes the system back to the JSON shape above (sorted keys).
std::string polytope_to_json(const HalfSpaceSystem& sys);

/// Comma-separated integers ("1,0,-2") -> IntVector. Throws ParseError.
IntVector parse_int_vector(const std::string& text);

/// One axis of a sweep grid: name in {"tau", "lambda"} and the
/// inclusive range lo..hi stepped by step > 0.
struct GridRange {
  std::string name;
  Rational lo;
  Rational hi;
  Rational step;

  std::vector<Rational> values() const;
};

/// Parses "tau=1..3step1/2;lambda=1..2step1/2". Each axis appears at
/// most once. Throws ParseError on malformed text.
std::vector<GridRange> parse_grid(const std::string& text);

/// One row of a sweep table. Cells hold exact rational strings; status
/// is "ok" for in-chamber points and "outside" otherwise (all value
/// cells empty, match vacuously true).
struct SweepRow {
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string status;
  std::optional<Rational> cm_dot_b;
  std::optional<Rational> invariant;
  std::optional<Rational> closed_form_invariant;
  bool match = true;
};

/// CSV with header parameters..., status, cm_dot_b, invariant,
/// closed_form_invariant, match; when decimal is set, approximate
/// float columns (suffix _approx) follow each rational column.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool decimal);

/// JSON report of cmd_validate: dimension, facets, vertices, the
/// Delzant verdict and diagnostic, simplicity. 1-based facet indices.
std::string validation_report_json(const HalfSpaceSystem& sys, bool decimal);

/// JSON report of cmd_invariant: per-facet Phi/Phi', Cm, value, the
/// infinite-order flag and its interpretation label.
std::string invariant_report_json(const HalfSpaceSystem& sys,
                                  const IntVector& b,
                                  const InvariantReport& rep, bool decimal);

/// JSON report of cmd_mass_linear: verdict, coefficients or witness,
/// evidence grid size.
std::string linearity_report_json(const HalfSpaceSystem& sys,
                                  const IntVector& b,
                                  const LinearityVerdict& verdict,
                                  bool decimal);

}  // namespace masslin
