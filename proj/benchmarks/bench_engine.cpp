#include <benchmark/benchmark.h>

#include "masslin/families.hpp"
#include "masslin/invariant.hpp"
#include "masslin/masslinear.hpp"
#include "masslin/moments.hpp"

using namespace masslin;

namespace {

HalfSpaceSystem cube(std::size_t n) {
  std::vector<IntVector> conormals;
  RatVector offsets(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector lo(n), hi(n);
    lo[j] = -1;
    hi[j] = 1;
    conormals.push_back(lo);
    conormals.push_back(hi);
    offsets[2 * j + 1] = Rational(static_cast<long>(j) + 1);
  }
  return HalfSpaceSystem(n, std::move(conormals), std::move(offsets));
}

HalfSpaceSystem instance(int n) {
  switch (n) {
    case 2:
      return make_hirzebruch({2, Rational(3), Rational(1)});
    case 3:
      return make_delta_p_bundle(
          {2, IntVector{1, 0}, Rational(1), Rational(1)});
    default:
      return make_delta_p_bundle(
          {3, IntVector{2, 0, -1}, Rational(3), Rational(1)});
  }
}

}  // namespace

static void BM_VertexEnumeration(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    HalfSpaceSystem sys = cube(n);
    benchmark::DoNotOptimize(sys.vertices().size());
  }
}
BENCHMARK(BM_VertexEnumeration)->DenseRange(2, 4);

static void BM_PolytopeMoments(benchmark::State& state) {
  const HalfSpaceSystem sys = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const MomentData m = polytope_moments(sys, 2);
    benchmark::DoNotOptimize(m.volume);
  }
}
BENCHMARK(BM_PolytopeMoments)->DenseRange(2, 4);

static void BM_CharacteristicNumber(benchmark::State& state) {
  const HalfSpaceSystem sys = instance(static_cast<int>(state.range(0)));
  IntVector b(sys.dim());
  b[0] = 2;
  b[sys.dim() - 1] = -1;
  for (auto _ : state) {
    const InvariantReport rep = characteristic_number(sys, b);
    benchmark::DoNotOptimize(rep.value);
  }
}
BENCHMARK(BM_CharacteristicNumber)->DenseRange(2, 4);

static void BM_SampleChamber(benchmark::State& state) {
  const Chamber ch(instance(3));
  unsigned long seed = 0;
  for (auto _ : state) {
    auto samples = sample_chamber(ch, 16, ++seed);
    benchmark::DoNotOptimize(samples.size());
  }
}
BENCHMARK(BM_SampleChamber);

static void BM_MassLinearDecision(benchmark::State& state) {
  const Chamber ch(make_hirzebruch({2, Rational(3), Rational(1)}));
  const IntVector b{1, 1};
  for (auto _ : state) {
    const LinearityVerdict v = is_mass_linear(ch, b);
    benchmark::DoNotOptimize(v.linear);
  }
}
BENCHMARK(BM_MassLinearDecision);

BENCHMARK_MAIN();
