#include "masslin/verify.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "masslin/families.hpp"
#include "masslin/fit.hpp"
#include "masslin/masslinear.hpp"
#include "masslin/moments.hpp"
#include "masslin/parallel.hpp"

namespace masslin {

std::size_t SuiteResult::passed() const {
  std::size_t n = 0;
  for (const CheckResult& c : checks)
    if (c.pass) ++n;
  return n;
}

namespace {

using MaybeFail = std::optional<std::string>;

std::string ivec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ')';
}

/// Runs `count` exact-equality cases (possibly in parallel) and folds
/// them into one CheckResult; the lowest-index failure wins.
CheckResult run_cases(std::string name, std::size_t count,
                      std::function<MaybeFail(std::size_t)> fn) {
  CheckResult result;
  result.name = std::move(name);
  try {
    const auto fails = parallel_map<MaybeFail>(count, fn);
    for (const auto& f : fails) {
      if (f) {
        result.pass = false;
        result.detail = *f;
        return result;
      }
    }
    result.pass = true;
    result.detail = std::to_string(count) + " cases";
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

Rational random_rational(std::mt19937_64& rng, long bound) {
  static const long dens[] = {1, 2, 3, 4, 6, 8};
  const long num =
      static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) -
      bound;
  const long den = dens[rng() % 6];
  return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Shared parameter grids. Every (lambda, tau) pair below lies in the
// family's chamber for every listed twisting/shape parameter, which the
// suites verify rather than assume.

const std::vector<Rational>& bundle_lambdas() {
  static const std::vector<Rational> v{Rational(2), Rational(5, 2),
                                       Rational(3), Rational(10, 3)};
  return v;
}

const std::vector<Rational>& bundle_taus() {
  static const std::vector<Rational> v{Rational(1, 2), Rational(1),
                                       Rational(3, 2), Rational(7, 4)};
  return v;
}

struct BundleCase {
  DeltaPBundleSpec spec;  // lambda/tau at the reference grid corner
  std::vector<IntVector> bgrid;
};

const std::vector<BundleCase>& bundle_cases() {
  static const std::vector<BundleCase> cases = [] {
    std::vector<BundleCase> out;
    const auto add = [&out](IntVector a, std::vector<IntVector> bs) {
      DeltaPBundleSpec s;
      s.p = a.dim();
      s.a = std::move(a);
      s.lambda = bundle_lambdas().front();
      s.tau = bundle_taus().front();
      out.push_back({std::move(s), std::move(bs)});
    };
    // Each direction grid mixes pure horizontal, pure vertical, and
    // mixed b, and ends with two directions satisfying Z(b) = 0.
    add({1, 0},
        {{1, 0, 0},
         {0, 1, 0},
         {1, -1, 0},
         {0, 0, 1},
         {0, 0, -2},
         {1, 1, 1},
         {2, -1, 1},
         {0, 0, 0},
         {1, 2, 0},
         {1, 1, -1}});
    add({2, -1},
        {{1, 0, 0},
         {0, 1, 0},
         {1, -1, 0},
         {0, 0, 1},
         {0, 0, -2},
         {1, 1, 1},
         {2, -1, 1},
         {0, 0, 0},
         {4, 5, 0},
         {1, 3, 1}});
    add({0, 0},
        {{1, 0, 0},
         {0, 1, 0},
         {1, -1, 0},
         {0, 0, 1},
         {0, 0, -2},
         {1, 1, 1},
         {2, -1, 1},
         {0, 0, 0},
         {1, 2, 0},
         {4, 5, 0}});
    add({1, 1, 1},
        {{1, 0, 0, 0},
         {0, 1, 0, 0},
         {0, 0, 1, 0},
         {0, 0, 0, 1},
         {0, 0, 0, -2},
         {1, 1, 1, 1},
         {2, -1, 0, 1},
         {0, 0, 0, 0},
         {1, 1, 1, -2},
         {3, 0, 0, -2}});
    add({2, 0, -1},
        {{1, 0, 0, 0},
         {0, 1, 0, 0},
         {0, 0, 1, 0},
         {0, 0, 0, 1},
         {0, 0, 0, -2},
         {1, 1, 1, 1},
         {2, -1, 0, 1},
         {0, 0, 0, 0},
         {1, 2, 1, 0},
         {1, 7, 0, 0}});
    return out;
  }();
  return cases;
}

std::string bundle_tag(const BundleCase& bc) {
  return " p=" + std::to_string(bc.spec.p) + " a=" + ivec_str(bc.spec.a);
}

RatVector bundle_offsets(std::size_t p, const Rational& tau,
                         const Rational& lambda) {
  RatVector k(p + 3);
  k[p] = tau;
  k[p + 2] = lambda;
  return k;
}

constexpr std::size_t kGridSize = 16;  // 4 lambdas x 4 taus, all families

DeltaPBundleSpec bundle_at(const BundleCase& bc, std::size_t g) {
  DeltaPBundleSpec s = bc.spec;
  s.lambda = bundle_lambdas()[g / 4];
  s.tau = bundle_taus()[g % 4];
  return s;
}

const std::vector<Rational>& hirzebruch_lambdas() {
  static const std::vector<Rational> v{Rational(1, 4), Rational(1, 2),
                                       Rational(2, 3), Rational(1)};
  return v;
}

const std::vector<Rational>& hirzebruch_taus() {
  static const std::vector<Rational> v{Rational(4), Rational(5),
                                       Rational(19, 3), Rational(8)};
  return v;
}

const std::vector<IntVector>& hirzebruch_bgrid() {
  static const std::vector<IntVector> v{{1, 0}, {0, 1},  {1, 1},
                                        {2, 1}, {2, 3}, {-1, 2}};
  return v;
}

HirzebruchSpec hirzebruch_at(long k, std::size_t g) {
  HirzebruchSpec s;
  s.k = k;
  s.lambda = hirzebruch_lambdas()[g / 4];
  s.tau = hirzebruch_taus()[g % 4];
  return s;
}

const std::vector<Rational>& truncated_taus() {
  static const std::vector<Rational> v{Rational(2), Rational(3),
                                       Rational(5, 2), Rational(10, 3)};
  return v;
}

const std::vector<Rational>& truncated_lambdas() {
  static const std::vector<Rational> v{Rational(1), Rational(1, 2),
                                       Rational(3, 2), Rational(2, 3)};
  return v;
}

const std::vector<IntVector>& truncated_bgrid(std::size_t n) {
  static const std::vector<IntVector> b2{{1, 0}, {0, 1},  {1, 1},  {2, 1},
                                         {4, 2}, {-1, 2}, {3, -5}, {0, 0}};
  static const std::vector<IntVector> b3{
      {1, 0, 1},  {0, 0, 1}, {1, 1, 1}, {1, 2, 1},
      {2, 1, 1}, {-2, 3, 0}, {1, 0, 0}, {0, 0, 0}};
  static const std::vector<IntVector> b4{
      {1, 1, 1, 1},  {0, 0, 0, 1}, {1, 2, 1, 1}, {2, 1, 1, 1},
      {3, -1, 2, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}};
  switch (n) {
    case 2:
      return b2;
    case 3:
      return b3;
    default:
      return b4;
  }
}

TruncatedSimplexSpec truncated_at(std::size_t n, std::size_t g) {
  TruncatedSimplexSpec s;
  s.n = n;
  s.tau = truncated_taus()[g / 4];
  s.lambda = truncated_lambdas()[g % 4];
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult verify_lemma_moments() {
  SuiteResult suite{"lemma-moments", {}};

  static const std::vector<Rational> taus{Rational(1), Rational(2),
                                          Rational(5, 3)};
  for (std::size_t n = 1; n <= 4; ++n) {
    suite.checks.push_back(run_cases(
        "simplex moments n=" + std::to_string(n), taus.size(),
        [n](std::size_t ti) -> MaybeFail {
          const Rational& tau = taus[ti];
          const MomentData md = polytope_moments(make_simplex(n, tau), 2);
          const auto fail = [&](const std::string& what) -> MaybeFail {
            return "tau=" + tau.str() + ": " + what;
          };
          const unsigned un = static_cast<unsigned>(n);
          if (md.volume != tau.pow(n) / Rational(factorial(un)))
            return fail("volume != tau^n/n!");
          const Rational first = tau.pow(n + 1) / Rational(factorial(un + 1));
          const Rational square =
              Rational(2) * tau.pow(n + 2) / Rational(factorial(un + 2));
          const Rational cross = tau.pow(n + 2) / Rational(factorial(un + 2));
          for (std::size_t i = 0; i < n; ++i) {
            if (md.first[i] != first)
              return fail("first moment of x_" + std::to_string(i + 1));
            for (std::size_t j = 0; j < n; ++j) {
              const Rational& want = i == j ? square : cross;
              if (md.second->at(i, j) != want)
                return fail("second moment (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
            }
          }
          return std::nullopt;
        }));
  }

  for (std::size_t n = 2; n <= 3; ++n) {
    suite.checks.push_back(run_cases(
        "weighted simplex moments n=" + std::to_string(n), 5,
        [n](std::size_t ci) -> MaybeFail {
          std::mt19937_64 rng(500 + 16 * n + ci);
          static const long nums[] = {1, 2, 3, 4, 5, 6, 7, 8};
          std::vector<Rational> c(n);
          for (auto& ci2 : c)
            ci2 = Rational(nums[rng() % 8], nums[rng() % 8]);
          const Rational tau = ci % 2 == 0 ? Rational(1) : Rational(5, 3);
          const MomentData md =
              polytope_moments(make_scaled_simplex(c, tau), 1);
          Rational prod(1);
          for (const Rational& w : c) prod *= tau / w;
          std::ostringstream tag;
          tag << "c=(";
          for (std::size_t i = 0; i < n; ++i)
            tag << (i ? "," : "") << c[i].str();
          tag << ") tau=" << tau.str();
          const unsigned un = static_cast<unsigned>(n);
          if (md.volume != prod / Rational(factorial(un)))
            return tag.str() + ": volume mismatch";
          for (std::size_t j = 0; j < n; ++j)
            if (md.first[j] !=
                tau / c[j] * prod / Rational(factorial(un + 1)))
              return tag.str() + ": first moment of x_" +
                     std::to_string(j + 1);
          return std::nullopt;
        }));
  }
  return suite;
}

SuiteResult verify_bundle_factorization() {
  SuiteResult suite{"bundle-factorization", {}};
  for (const BundleCase& bc : bundle_cases()) {
    const std::string tag = bundle_tag(bc);
    const Chamber ch(make_delta_p_bundle(bc.spec));

    suite.checks.push_back(run_cases(
        "bundle parameter grid in-chamber" + tag, kGridSize,
        [&](std::size_t g) -> MaybeFail {
          const DeltaPBundleSpec s = bundle_at(bc, g);
          if (!same_chamber(ch, bundle_offsets(s.p, s.tau, s.lambda)))
            return "lambda=" + s.lambda.str() + " tau=" + s.tau.str() +
                   ": left the reference chamber";
          return std::nullopt;
        }));

    suite.checks.push_back(run_cases(
        "bundle invariant factorization and Cm" + tag, kGridSize,
        [&](std::size_t g) -> MaybeFail {
          const DeltaPBundleSpec s = bundle_at(bc, g);
          const HalfSpaceSystem sys = make_delta_p_bundle(s);
          const Rational K = bundle_K(s);
          for (const IntVector& b : bc.bgrid) {
            const InvariantReport rep = characteristic_number(sys, b);
            const Rational closed = K * bundle_Z(s, b);
            std::ostringstream at;
            at << "lambda=" << s.lambda.str() << " tau=" << s.tau.str()
               << " b=" << ivec_str(b);
            if (rep.value != closed)
              return at.str() + ": engine I=" + rep.value.str() +
                     " but K*Z=" + closed.str();
            const Rational cm_closed = bundle_cm(s, b);
            if (rep.cm_dot_b != cm_closed)
              return at.str() + ": engine <Cm,b>=" + rep.cm_dot_b.str() +
                     " but closed form=" + cm_closed.str();
          }
          return std::nullopt;
        }));
  }
  return suite;
}

SuiteResult verify_bundle_mass_linear() {
  SuiteResult suite{"bundle-mass-linear", {}};
  for (const BundleCase& bc : bundle_cases()) {
    const Chamber ch(make_delta_p_bundle(bc.spec));
    suite.checks.push_back(run_cases(
        "bundle mass-linear equivalence" + bundle_tag(bc), bc.bgrid.size(),
        [&](std::size_t bi) -> MaybeFail {
          const IntVector& b = bc.bgrid[bi];
          const bool z_zero = bundle_Z(bc.spec, b).is_zero();
          const LinearityVerdict verdict = is_mass_linear(ch, b);
          const std::string at = "b=" + ivec_str(b);
          if (verdict.linear != z_zero)
            return at + ": is_mass_linear=" +
                   (verdict.linear ? "true" : "false") +
                   " but Z(b)=" + bundle_Z(bc.spec, b).str();
          if (z_zero) {
            const ChamberPolynomial poly = interpolate_invariant(ch, b);
            if (!poly.is_zero())
              return at + ": Z(b)=0 but the interpolated invariant "
                          "polynomial is nonzero";
          }
          for (std::size_t g = 0; g < kGridSize; ++g) {
            const DeltaPBundleSpec s = bundle_at(bc, g);
            const Rational value =
                characteristic_number(make_delta_p_bundle(s), b).value;
            if (z_zero && !value.is_zero())
              return at + ": Z(b)=0 but I=" + value.str() + " at lambda=" +
                     s.lambda.str() + " tau=" + s.tau.str();
            if (!z_zero && value.is_zero())
              return at + ": Z(b)!=0 but I=0 at lambda=" + s.lambda.str() +
                     " tau=" + s.tau.str();
          }
          return std::nullopt;
        }));
  }
  return suite;
}

SuiteResult verify_hirzebruch() {
  SuiteResult suite{"hirzebruch", {}};

  suite.checks.push_back(run_cases(
      "trapezoid reference vertices", 1, [](std::size_t) -> MaybeFail {
        HirzebruchSpec s;
        s.k = 1;
        s.tau = Rational(2);
        s.lambda = Rational(1);
        const HalfSpaceSystem sys = make_hirzebruch(s);
        const auto& verts = sys.vertices();
        const std::vector<RatVector> expected{
            {Rational(0), Rational(0)},
            {Rational(0), Rational(1)},
            {Rational(1), Rational(1)},
            {Rational(2), Rational(0)}};
        if (verts.size() != expected.size())
          return std::string("expected 4 vertices");
        for (std::size_t i = 0; i < verts.size(); ++i)
          if (!(verts[i].point == expected[i]))
            return std::string("vertex list mismatch");
        return std::nullopt;
      }));

  for (long k = 1; k <= 3; ++k) {
    const std::string tag = " k=" + std::to_string(k);

    suite.checks.push_back(run_cases(
        "trapezoid Delzant and center of mass" + tag, kGridSize,
        [k](std::size_t g) -> MaybeFail {
          const HirzebruchSpec s = hirzebruch_at(k, g);
          const HalfSpaceSystem sys = make_hirzebruch(s);
          const std::string at =
              "lambda=" + s.lambda.str() + " tau=" + s.tau.str();
          if (!is_delzant(sys).ok) return at + ": not Delzant";
          if (!(center_of_mass(sys) == hirzebruch_cm(s)))
            return at + ": engine Cm differs from the closed form";
          return std::nullopt;
        }));

    suite.checks.push_back(run_cases(
        "trapezoid loop ratios and closed form" + tag, kGridSize,
        [k](std::size_t g) -> MaybeFail {
          const HirzebruchSpec s = hirzebruch_at(k, g);
          const HalfSpaceSystem sys = make_hirzebruch(s);
          const Rational base =
              characteristic_number(sys, IntVector{1, 0}).value;
          for (const IntVector& b : hirzebruch_bgrid()) {
            const Rational value = characteristic_number(sys, b).value;
            const Rational factor =
                Rational(b[0]) - Rational(2) * Rational(b[1]) / Rational(k);
            std::ostringstream at;
            at << "lambda=" << s.lambda.str() << " tau=" << s.tau.str()
               << " b=" << ivec_str(b);
            if (value != factor * base)
              return at.str() + ": I != (b1 - 2 b2/k) I(1,0)";
            if (value != hirzebruch_invariant(s, b))
              return at.str() + ": engine I=" + value.str() +
                     " but closed form=" + hirzebruch_invariant(s, b).str();
          }
          return std::nullopt;
        }));

    suite.checks.push_back(run_cases(
        "trapezoid mass-linear equivalence" + tag, hirzebruch_bgrid().size(),
        [k](std::size_t bi) -> MaybeFail {
          const IntVector& b = hirzebruch_bgrid()[bi];
          bool all_zero = true;
          for (std::size_t g = 0; g < kGridSize; ++g) {
            const HirzebruchSpec s = hirzebruch_at(k, g);
            if (!characteristic_number(make_hirzebruch(s), b)
                     .value.is_zero()) {
              all_zero = false;
              break;
            }
          }
          if (all_zero != hirzebruch_mass_linear(k, b))
            return "b=" + ivec_str(b) + ": I vanishing on the grid is " +
                   (all_zero ? "true" : "false") +
                   " but the criterion 2 b2 = k b1 is " +
                   (hirzebruch_mass_linear(k, b) ? "true" : "false");
          return std::nullopt;
        }));
  }
  return suite;
}

SuiteResult verify_truncated_simplex() {
  SuiteResult suite{"truncated-simplex", {}};

  for (std::size_t n = 2; n <= 4; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    const auto& bgrid = truncated_bgrid(n);

    suite.checks.push_back(run_cases(
        "truncated Delzant, Cm, and closed-form invariant" + tag, kGridSize,
        [n, &bgrid](std::size_t g) -> MaybeFail {
          const TruncatedSimplexSpec s = truncated_at(n, g);
          const HalfSpaceSystem sys = make_truncated_simplex(s);
          const std::string at =
              "tau=" + s.tau.str() + " lambda=" + s.lambda.str();
          if (!is_delzant(sys).ok) return at + ": not Delzant";
          if (!(center_of_mass(sys) == truncated_cm(s)))
            return at + ": engine Cm differs from the closed form";
          for (const IntVector& b : bgrid) {
            const Rational value = characteristic_number(sys, b).value;
            if (value != truncated_invariant(s, b))
              return at + " b=" + ivec_str(b) + ": engine I=" + value.str() +
                     " but closed form=" + truncated_invariant(s, b).str();
          }
          return std::nullopt;
        }));

    suite.checks.push_back(run_cases(
        "truncated mass-linear equivalence" + tag, bgrid.size(),
        [n, &bgrid](std::size_t bi) -> MaybeFail {
          const IntVector& b = bgrid[bi];
          bool all_zero = true;
          for (std::size_t g = 0; g < kGridSize; ++g) {
            const TruncatedSimplexSpec s = truncated_at(n, g);
            if (!characteristic_number(make_truncated_simplex(s), b)
                     .value.is_zero()) {
              all_zero = false;
              break;
            }
          }
          if (all_zero != truncated_mass_linear(n, b))
            return "b=" + ivec_str(b) + ": I vanishing on the grid is " +
                   (all_zero ? "true" : "false") +
                   " but the criterion n b_n = sum b_j is " +
                   (truncated_mass_linear(n, b) ? "true" : "false");
          return std::nullopt;
        }));

    suite.checks.push_back(run_cases(
        "full simplex invariant vanishes" + tag, bgrid.size(),
        [n, &bgrid](std::size_t bi) -> MaybeFail {
          static const std::vector<Rational> taus{
              Rational(1), Rational(2), Rational(5, 3), Rational(7, 3)};
          for (const Rational& tau : taus)
            if (!simplex_invariant_zero_check(n, tau, bgrid[bi]))
              return "tau=" + tau.str() + " b=" + ivec_str(bgrid[bi]) +
                     ": nonzero invariant on the simplex";
          return std::nullopt;
        }));
  }

  // Leading coefficient of the expansion of I in eps = sigma/tau along
  // the ray of fixed tau, extracted by exact rational-function
  // reconstruction and compared with the closed form.
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto& bgrid = truncated_bgrid(n);
    // Three non mass linear directions and one mass linear one.
    const std::vector<IntVector> picks =
        n == 3 ? std::vector<IntVector>{bgrid[0], bgrid[1], bgrid[5], bgrid[3]}
               : std::vector<IntVector>{bgrid[0], bgrid[1], bgrid[4],
                                        bgrid[2]};
    static const std::vector<Rational> taus{Rational(1), Rational(2)};
    suite.checks.push_back(run_cases(
        "truncated eps-expansion leading coefficient n=" + std::to_string(n),
        picks.size() * taus.size(), [n, picks](std::size_t idx) -> MaybeFail {
          const Rational tau = taus[idx / picks.size()];
          const IntVector& b = picks[idx % picks.size()];
          const std::string at = "tau=" + tau.str() + " b=" + ivec_str(b);

          std::vector<std::pair<Rational, Rational>> samples;
          for (std::size_t s = 0; s < 3 * n + 6; ++s) {
            const Rational eps(1, static_cast<long>(s + 2));
            TruncatedSimplexSpec spec;
            spec.n = n;
            spec.tau = tau;
            spec.lambda = tau * (Rational(1) - eps);
            const Rational value =
                characteristic_number(make_truncated_simplex(spec), b).value;
            samples.emplace_back(eps, value);
          }
          const auto fit = reconstruct_rational_function(
              samples, static_cast<unsigned>(2 * n),
              static_cast<unsigned>(n));
          if (!fit)
            return at + ": no rational function of the expected degree "
                        "matches the samples";
          const auto coeffs = taylor_coefficients(*fit, n);
          for (std::size_t i = 0; i + 1 < n; ++i)
            if (!coeffs[i].is_zero())
              return at + ": eps^" + std::to_string(i) +
                     " coefficient is " + coeffs[i].str() + ", expected 0";
          const Rational want = truncated_leading_coefficient(n, tau, b);
          if (coeffs[n - 1] != want)
            return at + ": eps^" + std::to_string(n - 1) + " coefficient " +
                   coeffs[n - 1].str() + " != " + want.str();
          return std::nullopt;
        }));
  }

  suite.checks.push_back(run_cases(
      "loop ratios n=3", kGridSize, [](std::size_t g) -> MaybeFail {
        const TruncatedSimplexSpec s = truncated_at(3, g);
        const HalfSpaceSystem sys = make_truncated_simplex(s);
        const Rational i1 =
            characteristic_number(sys, unit_vector(3, 0)).value;
        const Rational i2 =
            characteristic_number(sys, unit_vector(3, 1)).value;
        const Rational i3 =
            characteristic_number(sys, unit_vector(3, 2)).value;
        const std::string at =
            "tau=" + s.tau.str() + " lambda=" + s.lambda.str();
        if (i1 != i2) return at + ": I(e1) != I(e2)";
        if (Rational(3) * i1 != -i3) return at + ": I(e1) != -I(e3)/3";
        return std::nullopt;
      }));

  return suite;
}

namespace {

struct StructuralInstance {
  HalfSpaceSystem sys;
  IntVector b1;
  IntVector b2;
};

std::vector<StructuralInstance> structural_bundle_instances() {
  std::vector<StructuralInstance> out;
  for (const BundleCase& bc : bundle_cases())
    for (std::size_t g = 0; g < kGridSize; ++g)
      out.push_back({make_delta_p_bundle(bundle_at(bc, g)), bc.bgrid[0],
                     bc.bgrid[1]});
  return out;
}

std::vector<StructuralInstance> structural_hirzebruch_instances() {
  std::vector<StructuralInstance> out;
  for (long k = 1; k <= 3; ++k)
    for (std::size_t g = 0; g < kGridSize; ++g)
      out.push_back({make_hirzebruch(hirzebruch_at(k, g)),
                     hirzebruch_bgrid()[0], hirzebruch_bgrid()[1]});
  return out;
}

std::vector<StructuralInstance> structural_truncated_instances() {
  std::vector<StructuralInstance> out;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t g = 0; g < kGridSize; ++g)
      out.push_back({make_truncated_simplex(truncated_at(n, g)),
                     truncated_bgrid(n)[0], truncated_bgrid(n)[1]});
  return out;
}

void append_structural_checks(SuiteResult& suite, const std::string& family,
                              const std::vector<StructuralInstance>& list) {
  suite.checks.push_back(run_cases(
      "translation invariance (" + family + ")", list.size(),
      [&list](std::size_t i) -> MaybeFail {
        const StructuralInstance& inst = list[i];
        std::mt19937_64 rng(9000 + i);
        for (int t = 0; t < 3; ++t) {
          RatVector a(inst.sys.dim());
          for (std::size_t d = 0; d < a.dim(); ++d)
            a[d] = random_rational(rng, 8);
          if (!check_translation_invariance(inst.sys, inst.b1, a))
            return "instance " + std::to_string(i) +
                   ": I changed under translation";
        }
        return std::nullopt;
      }));
  suite.checks.push_back(run_cases(
      "additivity in b (" + family + ")", list.size(),
      [&list](std::size_t i) -> MaybeFail {
        if (!check_additivity_in_b(list[i].sys, list[i].b1, list[i].b2))
          return "instance " + std::to_string(i) + ": I(b1+b2) != I(b1)+I(b2)";
        return std::nullopt;
      }));
  suite.checks.push_back(run_cases(
      "scaling homogeneity (" + family + ")", list.size(),
      [&list](std::size_t i) -> MaybeFail {
        for (long s = 2; s <= 3; ++s)
          if (!check_scaling_homogeneity(list[i].sys, list[i].b1, Rational(s)))
            return "instance " + std::to_string(i) + ": I(" +
                   std::to_string(s) + "k) != " + std::to_string(s) +
                   "^n I(k)";
        return std::nullopt;
      }));
  suite.checks.push_back(run_cases(
      "facet closure (" + family + ")", list.size(),
      [&list](std::size_t i) -> MaybeFail {
        // Minkowski relation: facet lattice volumes weight the outward
        // conormals to zero.
        const StructuralInstance& inst = list[i];
        const InvariantReport rep = characteristic_number(inst.sys, inst.b1);
        RatVector acc(inst.sys.dim());
        for (const FacetTerm& t : rep.facet_terms)
          acc += t.Phi * RatVector(inst.sys.conormal(t.facet));
        if (!acc.is_zero())
          return "instance " + std::to_string(i) +
                 ": weighted conormal sum is nonzero";
        return std::nullopt;
      }));
}

}  // namespace

SuiteResult verify_structural() {
  SuiteResult suite{"structural", {}};
  append_structural_checks(suite, "bundle", structural_bundle_instances());
  append_structural_checks(suite, "hirzebruch",
                           structural_hirzebruch_instances());
  append_structural_checks(suite, "truncated",
                           structural_truncated_instances());

  suite.checks.push_back(run_cases(
      "slab divisibility (hirzebruch lambda-slab)", 3,
      [](std::size_t i) -> MaybeFail {
        const long k = static_cast<long>(i) + 1;
        static const std::vector<IntVector> mass_linear{
            {2, 1}, {1, 1}, {2, 3}};
        HirzebruchSpec s;
        s.k = k;
        s.lambda = Rational(1, 4);
        s.tau = Rational(4);
        const Chamber ch(make_hirzebruch(s));
        if (!check_slab_divisibility(ch, mass_linear[i], {1, 2}))
          return "k=" + std::to_string(k) +
                 ": I not divisible by the slab width";
        return std::nullopt;
      }));
  suite.checks.push_back(run_cases(
      "slab divisibility (truncated lambda-slab)", 3,
      [](std::size_t i) -> MaybeFail {
        const std::size_t n = i + 2;
        static const std::vector<IntVector> mass_linear{
            {2, 1}, {1, 2, 1}, {1, 2, 1, 1}};
        TruncatedSimplexSpec s;
        s.n = n;
        s.tau = Rational(3);
        s.lambda = Rational(1);
        const Chamber ch(make_truncated_simplex(s));
        if (!check_slab_divisibility(ch, mass_linear[i], {n - 1, n}))
          return "n=" + std::to_string(n) +
                 ": I not divisible by the slab width";
        return std::nullopt;
      }));
  return suite;
}

namespace {

HalfSpaceSystem swap_coordinates(const HalfSpaceSystem& sys) {
  std::vector<IntVector> conormals;
  for (const IntVector& v : sys.conormals()) {
    IntVector w(2);
    w[0] = v[1];
    w[1] = v[0];
    conormals.push_back(std::move(w));
  }
  return HalfSpaceSystem(2, std::move(conormals), sys.offsets());
}

IntVector swap_coordinates(const IntVector& b) {
  IntVector w(2);
  w[0] = b[1];
  w[1] = b[0];
  return w;
}

}  // namespace

SuiteResult verify_cross_family() {
  SuiteResult suite{"cross-family", {}};

  suite.checks.push_back(run_cases(
      "identical half-space systems", kGridSize,
      [](std::size_t g) -> MaybeFail {
        const TruncatedSimplexSpec ts = truncated_at(2, g);
        HirzebruchSpec hs;
        hs.k = 1;
        hs.tau = ts.tau;
        hs.lambda = ts.lambda;
        const HalfSpaceSystem a = make_truncated_simplex(ts);
        const HalfSpaceSystem b = make_hirzebruch(hs);
        const std::string at =
            "tau=" + ts.tau.str() + " lambda=" + ts.lambda.str();
        if (!(a.conormals() == b.conormals())) return at + ": conormals";
        if (!(a.offsets() == b.offsets())) return at + ": offsets";
        if (!(a.vertices() == b.vertices())) return at + ": vertices";
        return std::nullopt;
      }));

  suite.checks.push_back(run_cases(
      "equal invariants and swap equivariance", kGridSize,
      [](std::size_t g) -> MaybeFail {
        const TruncatedSimplexSpec ts = truncated_at(2, g);
        HirzebruchSpec hs;
        hs.k = 1;
        hs.tau = ts.tau;
        hs.lambda = ts.lambda;
        const HalfSpaceSystem trunc = make_truncated_simplex(ts);
        const HalfSpaceSystem hirz = make_hirzebruch(hs);
        const HalfSpaceSystem swapped = swap_coordinates(hirz);
        for (const IntVector& b : hirzebruch_bgrid()) {
          const Rational it = characteristic_number(trunc, b).value;
          const Rational ih = characteristic_number(hirz, b).value;
          std::ostringstream at;
          at << "tau=" << ts.tau.str() << " lambda=" << ts.lambda.str()
             << " b=" << ivec_str(b);
          if (it != ih)
            return at.str() + ": truncated I=" + it.str() +
                   " != trapezoid I=" + ih.str();
          const Rational is =
              characteristic_number(swapped, swap_coordinates(b)).value;
          if (is != ih)
            return at.str() + ": I not invariant under the coordinate swap";
        }
        return std::nullopt;
      }));

  suite.checks.push_back(run_cases(
      "mass-linear criteria agree", hirzebruch_bgrid().size(),
      [](std::size_t bi) -> MaybeFail {
        const IntVector& b = hirzebruch_bgrid()[bi];
        if (truncated_mass_linear(2, b) != hirzebruch_mass_linear(1, b))
          return "b=" + ivec_str(b) + ": criteria disagree";
        return std::nullopt;
      }));

  return suite;
}

const std::vector<std::string>& verification_suite_names() {
  static const std::vector<std::string> names{
      "lemma-moments", "bundle-factorization", "bundle-mass-linear",
      "hirzebruch",    "truncated-simplex",    "structural",
      "cross-family",  "equivalences",         "all"};
  return names;
}

std::vector<SuiteResult> run_verification(const std::string& name) {
  if (name == "lemma-moments") return {verify_lemma_moments()};
  if (name == "bundle-factorization") return {verify_bundle_factorization()};
  if (name == "bundle-mass-linear") return {verify_bundle_mass_linear()};
  if (name == "hirzebruch") return {verify_hirzebruch()};
  if (name == "truncated-simplex") return {verify_truncated_simplex()};
  if (name == "structural") return {verify_structural()};
  if (name == "cross-family") return {verify_cross_family()};
  if (name == "equivalences")
    return {verify_bundle_mass_linear(), verify_hirzebruch(),
            verify_truncated_simplex()};
  if (name == "all")
    return {verify_lemma_moments(),     verify_bundle_factorization(),
            verify_bundle_mass_linear(), verify_hirzebruch(),
            verify_truncated_simplex(), verify_structural(),
            verify_cross_family()};
  throw ParseError("unknown verification suite \"" + name +
                   "\" (see --help for the list)");
}

}  // namespace masslin
