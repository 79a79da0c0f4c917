#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "masslin/fit.hpp"

using namespace masslin;

namespace {

std::vector<std::pair<Rational, Rational>> sample_poly(const RatPoly& p,
                                                       int count) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (int i = 0; i < count; ++i) {
    const Rational x(i - count / 2);
    pts.emplace_back(x, p.eval(x));
  }
  return pts;
}

}  // namespace

TEST_CASE("RatPoly basics") {
  RatPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.eval(Rational(7)).is_zero());

  RatPoly p{{Rational(1), Rational(-2), Rational(1)}};  // (x-1)^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(1)).is_zero());
  CHECK(p.eval(Rational(3)) == Rational(4));
  CHECK(p.eval(Rational(1, 2)) == Rational(1, 4));

  RatPoly padded{{Rational(5), Rational(0), Rational(0)}};
  padded.trim();
  CHECK(padded.degree() == 0);
  CHECK(padded.c.size() == 1);
}

TEST_CASE("Lagrange interpolation recovers polynomials") {
  const RatPoly cubic{
      {Rational(2), Rational(-1, 3), Rational(0), Rational(5, 2)}};
  CHECK(lagrange_interpolate(sample_poly(cubic, 4)) == cubic);
  // Extra points don't change the answer.
  CHECK(lagrange_interpolate(sample_poly(cubic, 9)) == cubic);

  // Constant data.
  const RatPoly c{{Rational(4, 7)}};
  CHECK(lagrange_interpolate(sample_poly(c, 3)) == c);

  // All-zero data gives the zero polynomial.
  CHECK(lagrange_interpolate(sample_poly(RatPoly{}, 5)).is_zero());
}

TEST_CASE("Lagrange interpolation input validation") {
  CHECK_THROWS_AS(lagrange_interpolate({}), DomainError);
  CHECK_THROWS_AS(lagrange_interpolate({{Rational(1), Rational(0)},
                                        {Rational(1), Rational(2)}}),
                  DomainError);
}

TEST_CASE("rational function evaluation") {
  // (x + 1) / (x - 2)
  const RatFunction f{RatPoly{{Rational(1), Rational(1)}},
                      RatPoly{{Rational(-2), Rational(1)}}};
  CHECK(f.eval(Rational(0)) == Rational(-1, 2));
  CHECK(f.eval(Rational(3)) == Rational(4));
  CHECK_THROWS_AS(f.eval(Rational(2)), DomainError);
}

TEST_CASE("rational function reconstruction") {
  // f = (2x^2 - 3) / (x + 5)
  const RatFunction f{RatPoly{{Rational(-3), Rational(0), Rational(2)}},
                      RatPoly{{Rational(5), Rational(1)}}};
  std::vector<std::pair<Rational, Rational>> samples;
  for (int i = 0; i < 8; ++i) {
    const Rational x(i);
    samples.emplace_back(x, f.eval(x));
  }
  const auto rec = reconstruct_rational_function(samples, 3, 2);
  REQUIRE(rec.has_value());
  // Minimal degrees are found even with slack in the bounds, up to
  // normalization: compare by cross-multiplied evaluation.
  CHECK(rec->num.degree() == 2);
  CHECK(rec->den.degree() == 1);
  for (int i = 20; i < 24; ++i)
    CHECK(rec->eval(Rational(i)) == f.eval(Rational(i)));
}

TEST_CASE("reconstruction of a plain polynomial") {
  const RatPoly p{{Rational(1), Rational(0), Rational(-1)}};  // 1 - x^2
  auto samples = sample_poly(p, 7);
  const auto rec = reconstruct_rational_function(samples, 2, 2);
  REQUIRE(rec.has_value());
  CHECK(rec->den.degree() == 0);
  for (int i = 10; i < 13; ++i)
    CHECK(rec->eval(Rational(i)) == p.eval(Rational(i)));
}

TEST_CASE("reconstruction of the zero function") {
  std::vector<std::pair<Rational, Rational>> samples;
  for (int i = 1; i <= 6; ++i) samples.emplace_back(Rational(i), Rational(0));
  const auto rec = reconstruct_rational_function(samples, 2, 2);
  REQUIRE(rec.has_value());
  CHECK(rec->num.is_zero());
  CHECK(rec->eval(Rational(100)).is_zero());
}

TEST_CASE("reconstruction failure modes") {
  // x^3 cannot fit within bounds (2, 0): nullopt, not a wrong answer.
  const RatPoly cube{{Rational(0), Rational(0), Rational(0), Rational(1)}};
  auto samples = sample_poly(cube, 9);
  CHECK_FALSE(reconstruct_rational_function(samples, 2, 0).has_value());

  // Too few samples for the requested bounds.
  samples.resize(3);
  CHECK_THROWS_AS(reconstruct_rational_function(samples, 2, 2), DomainError);

  // Duplicate sample abscissae.
  std::vector<std::pair<Rational, Rational>> dup{
      {Rational(1), Rational(1)}, {Rational(1), Rational(2)},
      {Rational(2), Rational(1)}, {Rational(3), Rational(1)},
      {Rational(4), Rational(1)}, {Rational(5), Rational(1)}};
  CHECK_THROWS_AS(reconstruct_rational_function(dup, 2, 2), DomainError);
}

TEST_CASE("Taylor expansion at zero") {
  // 1 / (1 - x) = 1 + x + x^2 + ...
  const RatFunction geo{RatPoly{{Rational(1)}},
                        RatPoly{{Rational(1), Rational(-1)}}};
  const auto coeffs = taylor_coefficients(geo, 5);
  REQUIRE(coeffs.size() == 5);
  for (const Rational& c : coeffs) CHECK(c == Rational(1));

  // (x + x^3) / (1 + x): coefficients 0, 1, -1, 2, -2, ...
  const RatFunction f{
      RatPoly{{Rational(0), Rational(1), Rational(0), Rational(1)}},
      RatPoly{{Rational(1), Rational(1)}}};
  const auto c = taylor_coefficients(f, 5);
  CHECK(c == std::vector<Rational>{Rational(0), Rational(1), Rational(-1),
                                   Rational(2), Rational(-2)});

  const RatFunction pole{RatPoly{{Rational(1)}},
                         RatPoly{{Rational(0), Rational(1)}}};
  CHECK_THROWS_AS(taylor_coefficients(pole, 3), DomainError);
}
