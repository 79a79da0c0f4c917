#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "masslin/moments.hpp"
#include "support/oracles.hpp"

using namespace masslin;

namespace {

HalfSpaceSystem unit_square() {
  return HalfSpaceSystem(
      2, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}},
      RatVector{Rational(0), Rational(0), Rational(1), Rational(1)});
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

TEST_CASE("triangulation covers the square with two triangles") {
  const auto pieces = triangulate(unit_square());
  CHECK(pieces.size() == 2);
  Rational area(0);
  for (const auto& s : pieces) {
    CHECK(s.d == 2);
    CHECK(s.vertices.size() == 3);
    area += simplex_moments(s, 0).volume;
  }
  CHECK(area == Rational(1));
}

TEST_CASE("simplex moments agree with the affine-map oracle") {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<RatVector> verts;
      for (std::size_t v = 0; v <= n; ++v) {
        RatVector p(n);
        for (std::size_t i = 0; i < n; ++i)
          p[i] = oracles::random_rational(rng);
        verts.push_back(std::move(p));
      }
      const auto oracle = oracles::affine_map_simplex_moments(verts);
      if (oracle.volume.is_zero()) continue;  // degenerate draw

      EmbeddedSimplex s{n, verts, std::nullopt};
      const MomentData md = simplex_moments(s, 2);
      CHECK(md.volume == oracle.volume);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(md.first[i] == oracle.first[i]);
        for (std::size_t j = 0; j < n; ++j)
          CHECK(md.second->at(i, j) == oracle.second.at(i, j));
      }
    }
  }
}

TEST_CASE("polygon area agrees with the shoelace oracle") {
  // Trapezoid, square, and a corner-cut square.
  const std::vector<HalfSpaceSystem> polys{
      HalfSpaceSystem(2, {{-1, 0}, {0, -1}, {0, 1}, {1, 2}},
                      RatVector{Rational(0), Rational(0), Rational(1),
                                Rational(4)}),
      unit_square(),
      HalfSpaceSystem(2, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {1, 1}},
                      RatVector{Rational(0), Rational(0), Rational(2),
                                Rational(2), Rational(3)})};
  for (const auto& sys : polys) {
    std::vector<RatVector> pts;
    for (const Vertex& v : sys.vertices()) pts.push_back(v.point);
    CHECK(polytope_moments(sys, 0).volume == oracles::shoelace_area(pts));
  }
}

TEST_CASE("square moments in closed form") {
  const MomentData md = polytope_moments(unit_square(), 2);
  CHECK(md.volume == Rational(1));
  CHECK(md.first == RatVector{Rational(1, 2), Rational(1, 2)});
  CHECK(md.second->at(0, 0) == Rational(1, 3));
  CHECK(md.second->at(1, 1) == Rational(1, 3));
  CHECK(md.second->at(0, 1) == Rational(1, 4));
  CHECK(md.second->at(1, 0) == Rational(1, 4));
}

TEST_CASE("moments are independent of the triangulation base policy") {
  const HalfSpaceSystem sys(
      2, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {1, 1}},
      RatVector{Rational(0), Rational(0), Rational(2), Rational(2),
                Rational(3)});
  MomentData a{}, b{};
  for (const auto& s :
       detail::triangulate_with_policy(sys, detail::BaseVertexPolicy::LexSmallest)) {
    const MomentData m = simplex_moments(s, 1);
    a.volume += m.volume;
    if (a.first.dim() == 0) a.first = RatVector(2);
    a.first += m.first;
  }
  for (const auto& s :
       detail::triangulate_with_policy(sys, detail::BaseVertexPolicy::LexLargest)) {
    const MomentData m = simplex_moments(s, 1);
    b.volume += m.volume;
    if (b.first.dim() == 0) b.first = RatVector(2);
    b.first += m.first;
  }
  CHECK(a.volume == b.volume);
  CHECK(a.first == b.first);
}

TEST_CASE("facet measures are lattice-normalized") {
  // Unit square: all four edges have lattice length 1.
  const HalfSpaceSystem sq = unit_square();
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(facet_lattice_moments(sq, j, 0).volume == Rational(1));

  // Slant facet of S_2(tau): Euclidean length tau*sqrt(2), conormal
  // norm sqrt(2), lattice length tau.
  for (const Rational tau : {Rational(1), Rational(3), Rational(5, 2)}) {
    const HalfSpaceSystem s2 = simplex(2, tau);
    CHECK(facet_lattice_moments(s2, 2, 0).volume == tau);
  }

  // Steep edge from (3,0) to (1,1): one lattice step of (-2,1).
  const HalfSpaceSystem trap(2, {{-1, 0}, {0, -1}, {0, 1}, {1, 2}},
                             RatVector{Rational(0), Rational(0), Rational(1),
                                       Rational(3)});
  CHECK(facet_lattice_moments(trap, 3, 0).volume == Rational(1));

  // Slant facet of S_3(2): lattice area tau^2/2 = 2.
  const HalfSpaceSystem s3 = simplex(3, Rational(2));
  CHECK(facet_lattice_moments(s3, 3, 0).volume == Rational(2));
}

TEST_CASE("center of mass") {
  CHECK(center_of_mass(unit_square()) ==
        RatVector{Rational(1, 2), Rational(1, 2)});
  for (std::size_t n = 2; n <= 4; ++n) {
    const Rational tau(7, 3);
    const RatVector cm = center_of_mass(simplex(n, tau));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(cm[i] == tau / Rational(static_cast<long>(n + 1)));
  }
}

TEST_CASE("facet centers of mass of the square are edge midpoints") {
  const HalfSpaceSystem sq = unit_square();
  CHECK(facet_center_of_mass(sq, 0) ==
        RatVector{Rational(0), Rational(1, 2)});
  CHECK(facet_center_of_mass(sq, 1) ==
        RatVector{Rational(1, 2), Rational(0)});
  CHECK(facet_center_of_mass(sq, 2) ==
        RatVector{Rational(1), Rational(1, 2)});
  CHECK(facet_center_of_mass(sq, 3) ==
        RatVector{Rational(1, 2), Rational(1)});
}

TEST_CASE("translation moves moments consistently") {
  const HalfSpaceSystem sys = simplex(3, Rational(2));
  const RatVector a{Rational(1, 2), Rational(-1), Rational(2, 3)};
  const HalfSpaceSystem moved = sys.with_offsets(translate_offsets(sys, a));
  const MomentData m0 = polytope_moments(sys, 1);
  const MomentData m1 = polytope_moments(moved, 1);
  CHECK(m1.volume == m0.volume);
  CHECK(m1.first == m0.first + m0.volume * a);
}
