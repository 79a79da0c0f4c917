#include "masslin/masslinear.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace masslin {

namespace {

// <Cm(Delta(k)), b> for offsets k in the chamber of ch.
Rational cm_dot_b_at(const Chamber& ch, const IntVector& b,
                     const RatVector& offsets) {
  const HalfSpaceSystem sys = ch.reference.with_offsets(offsets);
  return dot(b, center_of_mass(sys));
}

Rational invariant_at(const Chamber& ch, const IntVector& b,
                      const RatVector& offsets) {
  const HalfSpaceSystem sys = ch.reference.with_offsets(offsets);
  return characteristic_number(sys, b).value;
}

// Integer points of the chamber near a dilated copy of the reference.
// The chamber is a cone, so the reference scaled by the (positive)
// lcm of its offset denominators and then by any further integer
// factor stays inside; small integer perturbations around that base
// keep the monomial arithmetic of the interpolation fit cheap. May
// return fewer points than requested; callers top off with
// sample_chamber.
std::vector<RatVector> lattice_chamber_samples(const Chamber& ch,
                                               std::size_t count,
                                               unsigned long seed) {
  const RatVector& ref = ch.reference.offsets();
  const std::size_t m = ref.dim();
  Integer scale(1);
  for (std::size_t j = 0; j < m; ++j) {
    const Integer den = ref[j].den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }

  // Dilate until every +-1 coordinate perturbation has room.
  RatVector base(m);
  bool roomy = false;
  for (int doubling = 0; doubling < 24 && !roomy; ++doubling) {
    for (std::size_t j = 0; j < m; ++j) base[j] = ref[j] * Rational(scale);
    roomy = true;
    for (std::size_t j = 0; j < m && roomy; ++j) {
      for (int s : {1, -1}) {
        RatVector k = base;
        k[j] += Rational(s);
        if (!same_chamber(ch, k)) {
          roomy = false;
          break;
        }
      }
    }
    if (!roomy) scale *= 2;
  }
  if (!roomy) return {};

  std::mt19937_64 rng(seed);
  const long radius = 2;
  std::vector<RatVector> out;
  std::set<std::vector<std::string>> seen;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 64 * count + 256;
  while (out.size() < count && attempts < max_attempts) {
    ++attempts;
    RatVector k = base;
    std::vector<std::string> key(m);
    for (std::size_t j = 0; j < m; ++j) {
      k[j] += Rational(static_cast<long>(rng() % (2 * radius + 1)) - radius);
      key[j] = k[j].str();
    }
    if (!seen.insert(std::move(key)).second) continue;
    if (same_chamber(ch, k)) out.push_back(std::move(k));
  }
  return out;
}

// Largest step h = base / 2^t with k* + h e_j still in the chamber.
Rational chamber_step(const Chamber& ch, std::size_t j) {
  Rational scale(1);
  for (std::size_t i = 0; i < ch.reference.facet_count(); ++i)
    scale = std::max(scale, ch.reference.offset(i).abs());
  Rational h = scale * Rational(1, 4);
  for (int t = 0; t < 64; ++t) {
    RatVector k = ch.reference.offsets();
    k[j] += h;
    if (same_chamber(ch, k)) return h;
    h *= Rational(1, 2);
  }
  throw SamplingError("mass linear: no chamber step found for coordinate " +
                      std::to_string(j + 1));
}

}  // namespace

Rational ChamberPolynomial::evaluate(const RatVector& k) const {
  if (k.dim() != vars)
    throw DimensionError("chamber polynomial: wrong variable count");
  Rational acc(0);
  for (const auto& [expo, coeff] : terms) {
    Rational mono(1);
    for (std::size_t i = 0; i < vars; ++i)
      for (unsigned e = 0; e < expo[i]; ++e) mono *= k[i];
    acc += coeff * mono;
  }
  return acc;
}

std::vector<std::vector<unsigned>> homogeneous_exponents(std::size_t vars,
                                                         unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(vars, 0);
  const auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == vars) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (vars == 0) return out;
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

LinearityVerdict is_mass_linear(const Chamber& ch, const IntVector& b,
                                const SamplingConfig& cfg) {
  const std::size_t m = ch.reference.facet_count();
  const std::size_t n = ch.reference.dim();
  if (b.dim() != n) throw DimensionError("is_mass_linear: b dimension");

  const RatVector& kstar = ch.reference.offsets();
  const Rational f0 = cm_dot_b_at(ch, b, kstar);

  // Affine frame: reference plus one coordinate step each; gamma from
  // exact finite differences.
  RatVector gamma(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Rational h = chamber_step(ch, j);
    RatVector k = kstar;
    k[j] += h;
    gamma[j] = (cm_dot_b_at(ch, b, k) - f0) / h;
  }

  LinearityVerdict verdict;
  verdict.grid_size = m + 1;

  // A linear (not merely affine) map must reproduce the reference value.
  if (dot(gamma, kstar) != f0) {
    verdict.linear = false;
    verdict.witness = kstar;
    return verdict;
  }

  const std::size_t validation = cfg.validation_points > 0
                                     ? cfg.validation_points
                                     : (n + 3) * m;
  const auto samples = sample_chamber(ch, validation, cfg.seed);
  verdict.grid_size += samples.size();
  for (const RatVector& k : samples) {
    if (cm_dot_b_at(ch, b, k) != dot(gamma, k)) {
      verdict.linear = false;
      verdict.witness = k;
      return verdict;
    }
  }
  verdict.linear = true;
  verdict.coefficients = std::move(gamma);
  return verdict;
}

ChamberPolynomial interpolate_invariant(const Chamber& ch, const IntVector& b,
                                        const SamplingConfig& cfg) {
  const auto verdict = is_mass_linear(ch, b, cfg);
  if (!verdict.linear)
    throw DomainError("interpolate_invariant: pair is not mass linear");

  const std::size_t m = ch.reference.facet_count();
  const unsigned n = static_cast<unsigned>(ch.reference.dim());
  const auto exponents = homogeneous_exponents(m, n);
  const std::size_t M = exponents.size();

  const auto monomial_row = [&](const RatVector& k) {
    RatVector row(M);
    for (std::size_t c = 0; c < M; ++c) {
      Rational mono(1);
      for (std::size_t i = 0; i < m; ++i)
        for (unsigned e = 0; e < exponents[c][i]; ++e) mono *= k[i];
      row[c] = mono;
    }
    return row;
  };

  // Incremental Gauss-Jordan over augmented rows [monomials | I(k)]
  // until the monomial block reaches full rank M.
  std::vector<RatVector> reduced;            // reduced pivot rows
  std::vector<std::size_t> pivot_of;         // pivot column per row
  const std::size_t kHeldOut = 8;
  const std::size_t budget = 2 * M + 16;
  auto samples = lattice_chamber_samples(ch, budget + kHeldOut, cfg.seed + 1);
  if (samples.size() < budget + kHeldOut) {
    const auto extra =
        sample_chamber(ch, budget + kHeldOut - samples.size(), cfg.seed + 2);
    samples.insert(samples.end(), extra.begin(), extra.end());
  }
  std::size_t used = 0;

  const auto reduce_row = [&](RatVector row) {
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const Rational f = row[pivot_of[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c <= M; ++c) row[c] -= f * reduced[r][c];
    }
    return row;
  };

  while (pivot_of.size() < M && used < budget) {
    const RatVector& k = samples[used++];
    RatVector row = monomial_row(k);
    row.e.push_back(invariant_at(ch, b, k));
    row = reduce_row(std::move(row));

    std::size_t piv = M;
    for (std::size_t c = 0; c < M; ++c)
      if (!row[c].is_zero()) {
        piv = c;
        break;
      }
    if (piv == M) {
      if (!row[M].is_zero())
        throw ConsistencyError(
            "interpolate_invariant: samples are not polynomial of the "
            "expected degree");
      continue;
    }
    const Rational inv = Rational(1) / row[piv];
    for (std::size_t c = 0; c <= M; ++c) row[c] *= inv;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const Rational f = reduced[r][piv];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c <= M; ++c) reduced[r][c] -= f * row[c];
    }
    reduced.push_back(std::move(row));
    pivot_of.push_back(piv);
  }
  if (pivot_of.size() < M)
    throw SamplingError(
        "interpolate_invariant: sample budget exhausted before spanning the "
        "monomial space");

  RatVector coeffs(M);
  for (std::size_t r = 0; r < reduced.size(); ++r)
    coeffs[pivot_of[r]] = reduced[r][M];

  ChamberPolynomial poly;
  poly.vars = m;
  poly.degree = n;
  for (std::size_t c = 0; c < M; ++c)
    if (!coeffs[c].is_zero()) poly.terms.emplace(exponents[c], coeffs[c]);

  // Held-out validation on fresh samples.
  const std::size_t upto = std::min(samples.size(), used + kHeldOut);
  for (std::size_t i = used; i < upto; ++i) {
    if (poly.evaluate(samples[i]) != invariant_at(ch, b, samples[i]))
      throw ConsistencyError(
          "interpolate_invariant: held-out sample disagrees with the fitted "
          "polynomial");
  }
  return poly;
}

bool check_slab_divisibility(const Chamber& ch, const IntVector& b,
                             std::pair<std::size_t, std::size_t> slab) {
  const auto [a_idx, i_idx] = slab;
  const std::size_t m = ch.reference.facet_count();
  if (a_idx >= m || i_idx >= m || a_idx == i_idx)
    throw DomainError("slab divisibility: invalid facet pair");
  if (ch.reference.conormal(a_idx) != -ch.reference.conormal(i_idx))
    throw DomainError("slab divisibility: facets are not antipodal");

  const RatVector& ref = ch.reference.offsets();
  const Rational w_ref = ref[a_idx] + ref[i_idx];
  if (w_ref.sign() <= 0)
    throw DomainError("slab divisibility: reference slab width not positive");

  // I restricted to k_a = t - k_i is a polynomial of degree <= n in t
  // for a mass linear pair; one extra point validates that hypothesis.
  const std::size_t n = ch.reference.dim();
  const std::size_t points = n + 2;
  std::vector<std::pair<Rational, Rational>> line;
  Rational t = w_ref;
  const Rational shrink(3, 4);
  std::size_t guard = 0;
  while (line.size() < points) {
    if (++guard > 200)
      throw SamplingError("slab divisibility: no in-chamber line points");
    RatVector k = ref;
    k[a_idx] = t - ref[i_idx];
    if (same_chamber(ch, k)) line.emplace_back(t, invariant_at(ch, b, k));
    t *= shrink;
  }

  std::vector<std::pair<Rational, Rational>> fit_pts(line.begin(),
                                                     line.end() - 1);
  const RatPoly poly = lagrange_interpolate(fit_pts);
  const auto& [tv, yv] = line.back();
  if (poly.eval(tv) != yv)
    throw DomainError(
        "slab divisibility: restriction is not polynomial of degree n; "
        "pair is not mass linear on this chamber");
  return poly.eval(Rational(0)).is_zero();
}

RatVector mass_linear_coefficients(const Chamber& ch, const IntVector& b,
                                   const SamplingConfig& cfg) {
  auto verdict = is_mass_linear(ch, b, cfg);
  if (!verdict.linear)
    throw DomainError("mass_linear_coefficients: pair is not mass linear");
  return std::move(*verdict.coefficients);
}

}  // namespace masslin
