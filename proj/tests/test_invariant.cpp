#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "masslin/invariant.hpp"

using namespace masslin;

namespace {

HalfSpaceSystem unit_square() {
  return HalfSpaceSystem(
      2, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}},
      RatVector{Rational(0), Rational(0), Rational(1), Rational(1)});
}

// Trapezoid with k = 1, tau = 2, lambda = 1, built by hand.
HalfSpaceSystem trapezoid() {
  return HalfSpaceSystem(2, {{-1, 0}, {0, -1}, {0, 1}, {1, 1}},
                         RatVector{Rational(0), Rational(0), Rational(1),
                                   Rational(2)});
}

// Prism over the triangle with slanted ceiling: the p = 2 bundle with
// a = (1, 0), lambda = tau = 1, built by hand.
HalfSpaceSystem slanted_prism() {
  return HalfSpaceSystem(
      3, {{-1, 0, 0}, {0, -1, 0}, {1, 1, 0}, {0, 0, -1}, {-1, 0, 1}},
      RatVector{Rational(0), Rational(0), Rational(1), Rational(0),
                Rational(1)});
}

HalfSpaceSystem simplex(std::size_t n, const Rational& tau) {
  std::vector<IntVector> conormals;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector v(n);
    v[j] = -1;
    conormals.push_back(v);
  }
  IntVector slant(n);
  for (std::size_t j = 0; j < n; ++j) slant[j] = 1;
  conormals.push_back(slant);
  RatVector offsets(n + 1);
  offsets[n] = tau;
  return HalfSpaceSystem(n, conormals, offsets);
}

}  // namespace

TEST_CASE("trapezoid value, facet decomposition, and flag") {
  const HalfSpaceSystem sys = trapezoid();
  const InvariantReport rep = characteristic_number(sys, IntVector{1, 0});
  CHECK(rep.value == Rational(-2, 9));
  CHECK(rep.infinite_order_flag);
  CHECK_FALSE(rep.formal);
  CHECK(rep.cm_dot_b == dot(IntVector{1, 0}, rep.cm));

  REQUIRE(rep.facet_terms.size() == 4);
  Rational sum(0);
  for (const FacetTerm& t : rep.facet_terms) {
    CHECK(t.term == rep.cm_dot_b * t.Phi - t.PhiPrime);
    sum += t.term;
  }
  CHECK(rep.value == Rational(2) * sum);

  // Phi is the lattice facet volume here (n = 2, so (n-1)! = 1):
  // left edge length 1, bottom 2, ceiling 1, slant 1.
  CHECK(rep.facet_terms[0].Phi == Rational(1));
  CHECK(rep.facet_terms[1].Phi == Rational(2));
  CHECK(rep.facet_terms[2].Phi == Rational(1));
  CHECK(rep.facet_terms[3].Phi == Rational(1));
}

TEST_CASE("slanted prism frozen values") {
  const HalfSpaceSystem sys = slanted_prism();
  CHECK(characteristic_number(sys, IntVector{1, 0, 0}).value ==
        Rational(-3, 4));
  CHECK(characteristic_number(sys, IntVector{0, 0, 1}).value ==
        Rational(-3, 8));
  // Additivity composes the two.
  CHECK(characteristic_number(sys, IntVector{1, 0, 1}).value ==
        Rational(-9, 8));
}

TEST_CASE("products of intervals give zero") {
  const HalfSpaceSystem sq = unit_square();
  for (const IntVector& b :
       {IntVector{1, 0}, IntVector{0, 1}, IntVector{3, -2}})
    CHECK(characteristic_number(sq, b).value.is_zero());
  CHECK_FALSE(characteristic_number(sq, IntVector{1, 0}).infinite_order_flag);
}

TEST_CASE("simplex invariant vanishes for every direction") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const HalfSpaceSystem sys = simplex(n, Rational(5, 2));
    IntVector b(n);
    b[0] = 1;
    b[n - 1] = -3;
    CHECK(characteristic_number(sys, b).value.is_zero());
  }
}

TEST_CASE("zero direction gives zero") {
  CHECK(characteristic_number(trapezoid(), IntVector{0, 0}).value.is_zero());
}

TEST_CASE("non-Delzant input is rejected unless formal") {
  // |det| = 2 at the vertex where the last two facets meet.
  const HalfSpaceSystem bad(2, {{-1, 0}, {0, -1}, {1, 2}},
                            RatVector{Rational(0), Rational(0), Rational(2)});
  CHECK_THROWS_AS(characteristic_number(bad, IntVector{1, 0}),
                  NotDelzantError);
  const InvariantReport rep =
      characteristic_number(bad, IntVector{1, 0}, /*formal=*/true);
  CHECK(rep.formal);
  // The formula still evaluates to some exact rational.
  CHECK(rep.facet_terms.size() == 3);
}

TEST_CASE("b dimension mismatch") {
  CHECK_THROWS_AS(characteristic_number(trapezoid(), IntVector{1, 0, 0}),
                  DimensionError);
}

TEST_CASE("normalized Hamiltonian offset is minus <Cm, b>") {
  const HalfSpaceSystem sys = trapezoid();
  const IntVector b{2, -1};
  const InvariantReport rep = characteristic_number(sys, b);
  CHECK(normalized_hamiltonian_offset(sys, b) == -rep.cm_dot_b);
}

TEST_CASE("structural identities on hand-built systems") {
  for (const HalfSpaceSystem& sys : {trapezoid(), slanted_prism()}) {
    IntVector b1(sys.dim()), b2(sys.dim());
    b1[0] = 1;
    b2[sys.dim() - 1] = 2;
    CHECK(check_additivity_in_b(sys, b1, b2));
    CHECK(check_scaling_homogeneity(sys, b1, Rational(3)));
    CHECK(check_scaling_homogeneity(sys, b1, Rational(1, 2)));
    RatVector a(sys.dim());
    a[0] = Rational(-2, 3);
    a[sys.dim() - 1] = Rational(5);
    CHECK(check_translation_invariance(sys, b1, a));
  }
  CHECK_THROWS_AS(
      check_scaling_homogeneity(trapezoid(), IntVector{1, 0}, Rational(-1)),
      DomainError);
}

TEST_CASE("scaling homogeneity has the right exponent") {
  // Direct check of I(2k) = 2^n I(k) on the trapezoid.
  const HalfSpaceSystem sys = trapezoid();
  RatVector doubled = sys.offsets();
  doubled *= Rational(2);
  const Rational i1 = characteristic_number(sys, IntVector{1, 0}).value;
  const Rational i2 =
      characteristic_number(sys.with_offsets(doubled), IntVector{1, 0}).value;
  CHECK(i2 == Rational(4) * i1);
}
