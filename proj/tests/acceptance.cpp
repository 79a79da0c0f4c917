// Acceptance gate: runs every verification suite against its time
// budget, then the performance criterion on the largest instances.
// One line per criterion; exits nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "masslin/families.hpp"
#include "masslin/invariant.hpp"
#include "masslin/verify.hpp"

using namespace masslin;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  std::string name;
  bool pass;
  double elapsed;
  double budget;
  std::vector<std::string> notes;
};

Criterion run_suite(int number, const std::string& label,
                    const std::string& suite, double budget) {
  Criterion c{number, label, true, 0.0, budget, {}};
  const auto start = Clock::now();
  try {
    for (const SuiteResult& s : run_verification(suite)) {
      for (const CheckResult& r : s.checks) {
        if (!r.pass) {
          c.pass = false;
          c.notes.push_back(r.name + ": " + r.detail);
        }
      }
    }
  } catch (const std::exception& e) {
    c.pass = false;
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  c.elapsed = seconds_since(start);
  if (c.elapsed >= budget) {
    c.pass = false;
    c.notes.push_back("over time budget");
  }
  return c;
}

// Largest single instances within n <= 4, m <= 8: a 4-cube (m = 8), a
// twisted bundle at p = 3, a truncated 4-simplex, and an octagon with
// eight facets.
std::vector<std::pair<std::string, HalfSpaceSystem>> performance_instances() {
  std::vector<std::pair<std::string, HalfSpaceSystem>> out;

  std::vector<IntVector> cube_normals;
  RatVector cube_offsets(8);
  for (std::size_t j = 0; j < 4; ++j) {
    IntVector lo(4), hi(4);
    lo[j] = -1;
    hi[j] = 1;
    cube_normals.push_back(lo);
    cube_normals.push_back(hi);
    cube_offsets[2 * j] = Rational(0);
    cube_offsets[2 * j + 1] = Rational(static_cast<long>(j) + 1);
  }
  out.emplace_back("4-cube (n=4, m=8)",
                   HalfSpaceSystem(4, cube_normals, cube_offsets));

  out.emplace_back("bundle p=3 (n=4, m=6)",
                   make_delta_p_bundle(DeltaPBundleSpec{
                       3, IntVector{2, 0, -1}, Rational(3), Rational(1)}));

  out.emplace_back("truncated simplex n=4 (m=6)",
                   make_truncated_simplex(TruncatedSimplexSpec{
                       4, Rational(10, 3), Rational(1, 2)}));

  out.emplace_back(
      "octagon (n=2, m=8)",
      HalfSpaceSystem(2,
                      {{1, 0},
                       {1, 1},
                       {0, 1},
                       {-1, 1},
                       {-1, 0},
                       {-1, -1},
                       {0, -1},
                       {1, -1}},
                      RatVector{Rational(2), Rational(3), Rational(2),
                                Rational(3), Rational(2), Rational(3),
                                Rational(2), Rational(3)}));
  return out;
}

Criterion run_performance(int number, Clock::time_point whole_run_start) {
  Criterion c{number, "performance", true, 0.0, 1.0, {}};
  const auto start = Clock::now();
  for (const auto& [label, sys] : performance_instances()) {
    IntVector b(sys.dim());
    b[0] = 2;
    b[sys.dim() - 1] = -1;
    const auto t0 = Clock::now();
    const InvariantReport rep = characteristic_number(sys, b);
    const double dt = seconds_since(t0);
    char line[160];
    std::snprintf(line, sizeof line, "%s: I = %s in %.3f s", label.c_str(),
                  rep.value.str().c_str(), dt);
    c.notes.push_back(line);
    if (dt >= 1.0) {
      c.pass = false;
      c.notes.push_back(label + " exceeded 1 s");
    }
  }
  c.elapsed = seconds_since(start);

  const double total = seconds_since(whole_run_start);
  char line[96];
  std::snprintf(line, sizeof line, "full acceptance run: %.1f s (< 300 s)",
                total);
  c.notes.push_back(line);
  if (total >= 300.0) {
    c.pass = false;
    c.notes.push_back("full run over 5 minutes");
  }
  return c;
}

}  // namespace

int main() {
  const auto run_start = Clock::now();
  std::vector<Criterion> results;
  results.push_back(run_suite(1, "moment identities", "lemma-moments", 5));
  results.push_back(
      run_suite(2, "bundle factorization", "bundle-factorization", 60));
  results.push_back(
      run_suite(3, "bundle mass-linearity", "bundle-mass-linear", 120));
  results.push_back(run_suite(4, "Hirzebruch trapezoid", "hirzebruch", 30));
  results.push_back(
      run_suite(5, "truncated simplex", "truncated-simplex", 60));
  results.push_back(run_suite(6, "structural identities", "structural", 60));
  results.push_back(
      run_suite(7, "cross-family coherence", "cross-family", 10));
  results.push_back(run_performance(8, run_start));

  int failures = 0;
  for (const Criterion& c : results) {
    if (!c.pass) ++failures;
    std::printf("[%d] %-24s %s  (%.2f s < %.0f s)\n", c.number,
                c.name.c_str(), c.pass ? "PASS" : "FAIL", c.elapsed,
                c.budget);
    for (const std::string& note : c.notes)
      std::printf("      %s\n", note.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}
