#include "masslin/fit.hpp"

#include <algorithm>

namespace masslin {

void RatPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

RatPoly lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  if (n == 0) throw DomainError("interpolate: no points");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw DomainError("interpolate: duplicate x value");

  // Newton divided differences.
  std::vector<Rational> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) /
                (points[i].first - points[i - level].first);

  // Expand to monomial basis: p(x) = sum coef[i] * prod_{j<i} (x - x_j).
  RatPoly p;
  RatPoly basis;
  basis.c = {Rational(1)};
  for (std::size_t i = 0; i < n; ++i) {
    if (p.c.size() < basis.c.size()) p.c.resize(basis.c.size(), Rational(0));
    for (std::size_t k = 0; k < basis.c.size(); ++k)
      p.c[k] += coef[i] * basis.c[k];
    // basis *= (x - x_i)
    basis.c.insert(basis.c.begin(), Rational(0));
    for (std::size_t k = 0; k + 1 < basis.c.size(); ++k)
      basis.c[k] -= points[i].first * basis.c[k + 1];
  }
  p.trim();
  return p;
}

Rational RatFunction::eval(const Rational& x) const {
  const Rational d = den.eval(x);
  if (d.is_zero()) throw DomainError("rational function: pole at sample");
  return num.eval(x) / d;
}

std::optional<RatFunction> reconstruct_rational_function(
    const std::vector<std::pair<Rational, Rational>>& samples,
    unsigned max_num_degree, unsigned max_den_degree) {
  const std::size_t s = samples.size();
  if (s < max_num_degree + max_den_degree + 2)
    throw DomainError("reconstruct: too few samples for the degree bounds");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (samples[i].first == samples[j].first)
        throw DomainError("reconstruct: duplicate x value");

  // Minimal total degree first; the first exact fit is the reduced form.
  for (unsigned total = 0; total <= max_num_degree + max_den_degree; ++total) {
    for (unsigned dd = 0; dd <= std::min(total, max_den_degree); ++dd) {
      const unsigned dn = total - dd;
      if (dn > max_num_degree) continue;

      // Unknowns: p_0..p_dn, q_0..q_dd. Rows: P(x_i) - y_i Q(x_i) = 0.
      RatMatrix mtx(s, dn + dd + 2);
      for (std::size_t i = 0; i < s; ++i) {
        Rational xp(1);
        for (unsigned k = 0; k <= dn; ++k) {
          mtx.at(i, k) = xp;
          xp *= samples[i].first;
        }
        xp = Rational(1);
        for (unsigned k = 0; k <= dd; ++k) {
          mtx.at(i, dn + 1 + k) = -samples[i].second * xp;
          xp *= samples[i].first;
        }
      }
      const auto kernel = nullspace(mtx);
      if (kernel.empty()) continue;

      for (const RatVector& v : kernel) {
        RatFunction f;
        f.num.c.assign(v.e.begin(), v.e.begin() + dn + 1);
        f.den.c.assign(v.e.begin() + dn + 1, v.e.end());
        f.num.trim();
        f.den.trim();
        if (f.den.is_zero()) continue;
        bool ok = true;
        for (const auto& [x, y] : samples) {
          const Rational dv = f.den.eval(x);
          if (dv.is_zero() || f.num.eval(x) != y * dv) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        // Normalize: unit constant term when possible, else unit leading.
        const Rational scale =
            f.den.c.front().is_zero() ? f.den.c.back() : f.den.c.front();
        for (auto& cc : f.num.c) cc /= scale;
        for (auto& cc : f.den.c) cc /= scale;
        return f;
      }
    }
  }
  return std::nullopt;
}

std::vector<Rational> taylor_coefficients(const RatFunction& f,
                                          std::size_t count) {
  if (f.den.is_zero() || f.den.c.front().is_zero())
    throw DomainError("taylor: denominator vanishes at 0");
  std::vector<Rational> out(count, Rational(0));
  const auto p = [&](std::size_t i) {
    return i < f.num.c.size() ? f.num.c[i] : Rational(0);
  };
  const auto q = [&](std::size_t i) {
    return i < f.den.c.size() ? f.den.c[i] : Rational(0);
  };
  for (std::size_t i = 0; i < count; ++i) {
    Rational acc = p(i);
    for (std::size_t j = 1; j <= i; ++j) acc -= q(j) * out[i - j];
    out[i] = acc / q(0);
  }
  return out;
}

}  // namespace masslin
