#include "masslin/families.hpp"

#include <string>

#include "masslin/invariant.hpp"

namespace masslin {

namespace {

void require_positive(const Rational& v, const char* name) {
  if (v.sign() <= 0)
    throw DomainError(std::string(name) + " must be positive");
}

std::string coord_label(std::size_t j) {
  return "x" + std::to_string(j + 1) + ">=0";
}

}  // namespace

Integer DeltaPBundleSpec::A() const {
  Integer s(0);
  for (const Integer& ai : a.e) s += ai;
  return s;
}

HalfSpaceSystem make_delta_p_bundle(const DeltaPBundleSpec& spec) {
  if (spec.p < 2) throw DomainError("bundle: p must be at least 2");
  if (spec.a.dim() != spec.p)
    throw DimensionError("bundle: twisting vector must have length p");
  require_positive(spec.lambda, "bundle: lambda");
  require_positive(spec.tau, "bundle: tau");

  const std::size_t p = spec.p;
  const std::size_t n = p + 1;
  std::vector<IntVector> conormals;
  RatVector offsets(p + 3);
  std::vector<std::string> labels;
  conormals.reserve(p + 3);
  labels.reserve(p + 3);

  for (std::size_t i = 0; i < p; ++i) {
    IntVector v(n);
    v[i] = -1;
    conormals.push_back(std::move(v));
    labels.push_back(coord_label(i));
  }
  IntVector slant(n);
  for (std::size_t i = 0; i < p; ++i) slant[i] = 1;
  conormals.push_back(std::move(slant));
  offsets[p] = spec.tau;
  labels.push_back("base sum<=tau");

  IntVector bottom(n);
  bottom[p] = -1;
  conormals.push_back(std::move(bottom));
  labels.push_back(coord_label(p));

  IntVector ceiling(n);
  ceiling[p] = 1;
  for (std::size_t i = 0; i < p; ++i) ceiling[i] = -spec.a[i];
  conormals.push_back(std::move(ceiling));
  offsets[p + 2] = spec.lambda;
  labels.push_back("ceiling");

  HalfSpaceSystem sys(n, std::move(conormals), std::move(offsets),
                      std::move(labels));
  if (!sys.is_simple())
    throw GeometryError("bundle: polytope is not simple (collapsed ceiling)");
  return sys;
}

Rational bundle_Z(const DeltaPBundleSpec& spec, const IntVector& b) {
  if (b.dim() != spec.p + 1)
    throw DimensionError("bundle_Z: b must have length p+1");
  const Integer A = spec.A();
  const Integer& last = b[spec.p];
  Integer B(0), a_dot_bhat(0), a_dot_a(0);
  for (std::size_t i = 0; i < spec.p; ++i) {
    B += b[i];
    a_dot_bhat += spec.a[i] * b[i];
    a_dot_a += spec.a[i] * spec.a[i];
  }
  const Integer pp1(static_cast<long>(spec.p + 1));
  // (p+1) a.(2 bhat + b a) - A (2B + bA), split as Zhat + Zdot.
  const Integer z =
      pp1 * (2 * a_dot_bhat + last * a_dot_a) - A * (2 * B + last * A);
  return Rational(z);
}

namespace {

Rational bundle_denominator(const DeltaPBundleSpec& spec) {
  const Rational d = spec.lambda * Rational(static_cast<long>(spec.p + 1)) +
                     spec.tau * Rational(spec.A());
  if (d.is_zero())
    throw DomainError("bundle: lambda(p+1) + tau*A vanishes");
  return d;
}

}  // namespace

Rational bundle_K(const DeltaPBundleSpec& spec) {
  const Rational d = bundle_denominator(spec);
  const Rational tp1 = spec.tau.pow(spec.p + 1);
  return tp1 / Rational(static_cast<long>(spec.p + 2)) *
         (spec.tau / d - Rational(1));
}

Rational bundle_cm(const DeltaPBundleSpec& spec, const IntVector& b) {
  if (b.dim() != spec.p + 1)
    throw DimensionError("bundle_cm: b must have length p+1");
  const Rational d = bundle_denominator(spec);
  const Rational p1(static_cast<long>(spec.p + 1));
  const Rational p2(static_cast<long>(spec.p + 2));
  const Rational A(spec.A());
  Integer Bi(0), a_dot_bhat(0), a_dot_a(0);
  for (std::size_t i = 0; i < spec.p; ++i) {
    Bi += b[i];
    a_dot_bhat += spec.a[i] * b[i];
    a_dot_a += spec.a[i] * spec.a[i];
  }
  const Rational B(Bi);
  // <Cm, bhat> = tau/(p+2) * (lambda(p+2)B + tau(AB + a.bhat)) / d
  const Rational hat = spec.tau / p2 *
                       (spec.lambda * p2 * B +
                        spec.tau * (A * B + Rational(a_dot_bhat))) /
                       d;
  // <Cm, bdot> = b/2 * ((p+1)(p+2)l^2 + 2(p+2)A l t + (a.a + A^2) t^2)
  //              / ((p+2) d)
  const Rational dot =
      Rational(b[spec.p]) / Rational(2) *
      (p1 * p2 * spec.lambda * spec.lambda +
       Rational(2) * p2 * A * spec.lambda * spec.tau +
       (Rational(a_dot_a) + A * A) * spec.tau * spec.tau) /
      (p2 * d);
  return hat + dot;
}

Rational bundle_invariant(const DeltaPBundleSpec& spec, const IntVector& b) {
  return bundle_K(spec) * bundle_Z(spec, b);
}

BundleParameterReadings bundle_parameter_readings(
    const DeltaPBundleSpec& spec) {
  BundleParameterReadings r;
  r.offset_inequality = true;
  r.height_inequality = true;
  for (std::size_t i = 0; i < spec.p; ++i) {
    const Rational ai(spec.a[i]);
    if (spec.lambda + ai <= Rational(0)) r.offset_inequality = false;
    if (spec.lambda + ai * spec.tau <= Rational(0)) r.height_inequality = false;
  }
  try {
    const HalfSpaceSystem sys = make_delta_p_bundle(spec);
    // Prism combinatorics: 2(p+1) vertices with floor and ceiling each
    // carrying a copy of the base simplex. A ceiling that dips below
    // the base can reappear with the right vertex count but a cut
    // floor, so count incidences rather than vertices alone.
    const std::size_t floor_f = spec.p + 1, ceiling_f = spec.p + 2;
    std::size_t on_floor = 0, on_ceiling = 0;
    for (const Vertex& v : sys.vertices()) {
      for (const std::size_t f : v.active) {
        if (f == floor_f) ++on_floor;
        if (f == ceiling_f) ++on_ceiling;
      }
    }
    r.geometric = sys.vertices().size() == 2 * (spec.p + 1) &&
                  on_floor == spec.p + 1 && on_ceiling == spec.p + 1;
  } catch (const GeometryError&) {
    r.geometric = false;
  }
  return r;
}

HalfSpaceSystem make_hirzebruch(const HirzebruchSpec& spec) {
  if (spec.k < 1) throw DomainError("hirzebruch: k must be a positive integer");
  require_positive(spec.tau, "hirzebruch: tau");
  require_positive(spec.lambda, "hirzebruch: lambda");
  if (spec.sigma().sign() <= 0)
    throw GeometryError("hirzebruch: sigma = tau - k*lambda must be positive");

  std::vector<IntVector> conormals;
  conormals.push_back(IntVector{-1, 0});
  conormals.push_back(IntVector{0, -1});
  conormals.push_back(IntVector{0, 1});
  IntVector slant(2);
  slant[0] = 1;
  slant[1] = spec.k;
  conormals.push_back(std::move(slant));
  RatVector offsets{Rational(0), Rational(0), spec.lambda, spec.tau};
  std::vector<std::string> labels = {"x1>=0", "x2>=0", "x2<=lambda",
                                     "x1+k*x2<=tau"};
  return HalfSpaceSystem(2, std::move(conormals), std::move(offsets),
                         std::move(labels));
}

bool hirzebruch_mass_linear(long k, const IntVector& b) {
  if (b.dim() != 2)
    throw DimensionError("hirzebruch_mass_linear: b must have length 2");
  return 2 * b[1] == Integer(k) * b[0];
}

RatVector hirzebruch_cm(const HirzebruchSpec& spec) {
  const Rational k(spec.k);
  const Rational den = Rational(3) * (Rational(2) * spec.tau - k * spec.lambda);
  if (den.is_zero()) throw DomainError("hirzebruch_cm: degenerate parameters");
  RatVector cm(2);
  cm[0] = (Rational(3) * spec.tau * spec.tau -
           Rational(3) * k * spec.tau * spec.lambda +
           k * k * spec.lambda * spec.lambda) /
          den;
  cm[1] = (Rational(3) * spec.lambda * spec.tau -
           Rational(2) * k * spec.lambda * spec.lambda) /
          den;
  return cm;
}

Rational hirzebruch_invariant(const HirzebruchSpec& spec, const IntVector& b) {
  if (b.dim() != 2)
    throw DimensionError("hirzebruch_invariant: b must have length 2");
  const Rational k(spec.k);
  const Rational den = Rational(3) * (Rational(2) * spec.tau - k * spec.lambda);
  if (den.is_zero())
    throw DomainError("hirzebruch_invariant: degenerate parameters");
  const Rational i_phi = k * k * spec.lambda * spec.lambda *
                         ((k + Rational(1)) * spec.lambda -
                          Rational(2) * spec.tau) /
                         den;
  return (Rational(b[0]) - Rational(2) * Rational(b[1]) / k) * i_phi;
}

bool hirzebruch_loop_ratio_check(const HirzebruchSpec& spec,
                                 const IntVector& b) {
  const HalfSpaceSystem sys = make_hirzebruch(spec);
  const Rational lhs = characteristic_number(sys, b).value;
  const Rational base = characteristic_number(sys, IntVector{1, 0}).value;
  const Rational factor =
      Rational(b[0]) - Rational(2) * Rational(b[1]) / Rational(spec.k);
  return lhs == factor * base;
}

Rational TruncatedSimplexSpec::epsilon() const {
  if (tau.is_zero()) throw DomainError("truncated simplex: tau is zero");
  return sigma() / tau;
}

HalfSpaceSystem make_truncated_simplex(const TruncatedSimplexSpec& spec) {
  if (spec.n < 2) throw DomainError("truncated simplex: n must be at least 2");
  require_positive(spec.tau, "truncated simplex: tau");
  require_positive(spec.lambda, "truncated simplex: lambda");
  if (spec.sigma().sign() <= 0)
    throw GeometryError(
        "truncated simplex: sigma = tau - lambda must be positive");

  const std::size_t n = spec.n;
  std::vector<IntVector> conormals;
  std::vector<std::string> labels;
  RatVector offsets(n + 2);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector v(n);
    v[j] = -1;
    conormals.push_back(std::move(v));
    labels.push_back(coord_label(j));
  }
  IntVector ceiling(n);
  ceiling[n - 1] = 1;
  conormals.push_back(std::move(ceiling));
  offsets[n] = spec.lambda;
  labels.push_back("ceiling");
  IntVector slant(n);
  for (std::size_t j = 0; j < n; ++j) slant[j] = 1;
  conormals.push_back(std::move(slant));
  offsets[n + 1] = spec.tau;
  labels.push_back("slant");
  return HalfSpaceSystem(n, std::move(conormals), std::move(offsets),
                         std::move(labels));
}

bool truncated_mass_linear(std::size_t n, const IntVector& b) {
  if (b.dim() != n)
    throw DimensionError("truncated_mass_linear: b must have length n");
  Integer head(0);
  for (std::size_t j = 0; j + 1 < n; ++j) head += b[j];
  return Integer(static_cast<long>(n)) * b[n - 1] == head;
}

RatVector truncated_cm(const TruncatedSimplexSpec& spec) {
  const std::size_t n = spec.n;
  const Rational sigma = spec.sigma();
  const Rational tn = spec.tau.pow(n);
  const Rational sn = sigma.pow(n);
  const Rational den = tn - sn;
  if (den.is_zero()) throw DomainError("truncated_cm: degenerate parameters");
  const Rational shared = (spec.tau.pow(n + 1) - sigma.pow(n + 1)) /
                          (Rational(static_cast<long>(n + 1)) * den);
  RatVector cm(n);
  for (std::size_t j = 0; j < n; ++j) cm[j] = shared;
  cm[n - 1] -= spec.lambda * sn / den;
  return cm;
}

Rational truncated_invariant(const TruncatedSimplexSpec& spec,
                             const IntVector& b) {
  const std::size_t n = spec.n;
  if (b.dim() != n)
    throw DimensionError("truncated_invariant: b must have length n");
  const Rational sigma = spec.sigma();
  const Rational rn(static_cast<long>(n));

  const Rational sum_phi = Rational(static_cast<long>(n + 1)) *
                               spec.tau.pow(n - 1) +
                           (Rational(1) - rn) * sigma.pow(n - 1);

  Rational head(0);
  for (std::size_t j = 0; j + 1 < n; ++j) head += Rational(b[j]);
  const Rational bn(b[n - 1]);
  // sum Phi'(bhat) = (1/n)(n tau^n + (2-n) sigma^n) * sum_{j<n} b_j
  const Rational sum_phi_hat =
      (rn * spec.tau.pow(n) + (Rational(2) - rn) * sigma.pow(n)) / rn * head;
  // sum Phi'(bdot) = b_n (tau^n + (1-n) tau sigma^{n-1} + (n-2) sigma^n)
  const Rational sum_phi_dot =
      bn * (spec.tau.pow(n) + (Rational(1) - rn) * spec.tau * sigma.pow(n - 1) +
            (rn - Rational(2)) * sigma.pow(n));

  const Rational cm_dot_b = dot(b, truncated_cm(spec));
  return rn * (cm_dot_b * sum_phi - (sum_phi_hat + sum_phi_dot));
}

Rational truncated_leading_coefficient(std::size_t n, const Rational& tau,
                                       const IntVector& b) {
  if (n < 3)
    throw DomainError(
        "truncated_leading_coefficient: requires n >= 3 (compare the n = 2 "
        "expansion directly)");
  if (b.dim() != n)
    throw DimensionError(
        "truncated_leading_coefficient: b must have length n");
  Integer head(0);
  for (std::size_t j = 0; j + 1 < n; ++j) head += b[j];
  const Integer lead = Integer(static_cast<long>(n)) * b[n - 1] - head;
  const Integer num = factorial(static_cast<unsigned>(n)) * lead;
  const Integer den =
      Integer(static_cast<long>(n + 1)) * factorial(static_cast<unsigned>(n - 2));
  return Rational(num) * tau.pow(n) / Rational(den);
}

bool simplex_invariant_zero_check(std::size_t n, const Rational& tau,
                                  const IntVector& b) {
  const HalfSpaceSystem sys = make_simplex(n, tau);
  return characteristic_number(sys, b).value.is_zero();
}

HalfSpaceSystem make_simplex(std::size_t n, const Rational& tau) {
  if (n < 1) throw DomainError("simplex: n must be at least 1");
  require_positive(tau, "simplex: tau");
  std::vector<IntVector> conormals;
  std::vector<std::string> labels;
  RatVector offsets(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector v(n);
    v[j] = -1;
    conormals.push_back(std::move(v));
    labels.push_back(coord_label(j));
  }
  IntVector slant(n);
  for (std::size_t j = 0; j < n; ++j) slant[j] = 1;
  conormals.push_back(std::move(slant));
  offsets[n] = tau;
  labels.push_back("slant");
  return HalfSpaceSystem(n, std::move(conormals), std::move(offsets),
                         std::move(labels));
}

HalfSpaceSystem make_scaled_simplex(const std::vector<Rational>& c,
                                    const Rational& tau) {
  const std::size_t n = c.size();
  if (n < 1) throw DomainError("scaled simplex: need at least one weight");
  require_positive(tau, "scaled simplex: tau");
  for (const Rational& ci : c) require_positive(ci, "scaled simplex: weight");

  // Clear denominators of sum c_j x_j <= tau, then reduce to a
  // primitive conormal; the feasible set is unchanged.
  Integer lcm(1);
  for (const Rational& ci : c) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), lcm.get_mpz_t(), ci.den().get_mpz_t());
    lcm = g;
  }
  IntVector slant(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational scaled = c[j] * Rational(lcm);
    slant[j] = scaled.num();  // integral by construction
  }
  Integer g = slant[0];
  for (std::size_t j = 1; j < n; ++j)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), slant[j].get_mpz_t());
  for (std::size_t j = 0; j < n; ++j)
    mpz_divexact(slant[j].get_mpz_t(), slant[j].get_mpz_t(), g.get_mpz_t());
  const Rational offset = tau * Rational(lcm) / Rational(g);

  std::vector<IntVector> conormals;
  std::vector<std::string> labels;
  RatVector offsets(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector v(n);
    v[j] = -1;
    conormals.push_back(std::move(v));
    labels.push_back(coord_label(j));
  }
  conormals.push_back(std::move(slant));
  offsets[n] = offset;
  labels.push_back("slant");
  return HalfSpaceSystem(n, std::move(conormals), std::move(offsets),
                         std::move(labels));
}

}  // namespace masslin
