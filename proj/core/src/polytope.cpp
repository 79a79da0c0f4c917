#include "masslin/polytope.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace masslin {

namespace {

std::string point_str(const RatVector& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  os << ")";
  return os.str();
}

// Visits all size-k index subsets of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(const_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < m) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

// The recession cone {y : <n_j, y> <= 0 for all j} must be {0} for a
// bounded feasible set. A nontrivial cone either contains a line
// (conormal rank < n) or an extreme ray tight on n-1 independent
// constraints, so kernel generators of (n-1)-subsets cover all cases.
bool recession_cone_is_trivial(std::size_t n,
                               const std::vector<IntVector>& conormals) {
  const std::size_t m = conormals.size();
  if (rank(RatMatrix::from_rows(conormals)) < n) return false;

  bool trivial = true;
  for_each_subset(m, n - 1, [&](const std::vector<std::size_t>& idx) {
    if (!trivial) return;
    RatMatrix ms(idx.size(), n);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        ms.at(i, j) = Rational(conormals[idx[i]][j]);
    const auto kernel = nullspace(ms);
    if (kernel.size() != 1) return;
    for (const RatVector& dir : {kernel[0], -kernel[0]}) {
      bool inside = true;
      for (const auto& c : conormals) {
        if (dot(c, dir).sign() > 0) {
          inside = false;
          break;
        }
      }
      if (inside) {
        trivial = false;
        return;
      }
    }
  });
  return trivial;
}

std::size_t affine_rank(const std::vector<RatVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<RatVector> diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(RatMatrix::from_rows(diffs));
}

}  // namespace

HalfSpaceSystem::HalfSpaceSystem(std::size_t n,
                                 std::vector<IntVector> conormals,
                                 RatVector offsets,
                                 std::vector<std::string> labels)
    : n_(n),
      conormals_(std::move(conormals)),
      offsets_(std::move(offsets)),
      labels_(std::move(labels)) {
  const std::size_t m = conormals_.size();
  if (n_ == 0) throw DimensionError("polytope: ambient dimension must be positive");
  if (offsets_.dim() != m)
    throw DimensionError("polytope: offsets length must equal facet count");
  if (!labels_.empty() && labels_.size() != m)
    throw DimensionError("polytope: labels length must equal facet count");
  if (m < n_ + 1)
    throw GeometryError("polytope: need at least n+1 facets");
  for (std::size_t j = 0; j < m; ++j) {
    if (conormals_[j].dim() != n_)
      throw DimensionError("polytope: conormal dimension mismatch");
    if (conormals_[j].is_zero())
      throw DomainError("polytope: zero conormal");
    if (primitive(conormals_[j]) != conormals_[j])
      throw DomainError("polytope: conormal is not primitive");
  }

  if (!recession_cone_is_trivial(n_, conormals_))
    throw GeometryError("polytope: feasible set is unbounded");

  // Every vertex solves an n-subset of tight facets; dedupe by exact
  // point equality, then record full active sets.
  std::map<std::vector<Rational>, RatVector> points;
  for_each_subset(m, n_, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> rows;
    rows.reserve(n_);
    RatVector rhs(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      rows.push_back(conormals_[idx[i]]);
      rhs[i] = offsets_[idx[i]];
    }
    const auto x = solve(RatMatrix::from_rows(rows), rhs);
    if (!x) return;
    if (!contains(*x)) return;
    points.emplace(x->e, *x);
  });

  if (points.empty())
    throw GeometryError("polytope: feasible set has no vertex (empty input)");

  vertices_.reserve(points.size());
  for (const auto& [key, pt] : points) {
    Vertex v;
    v.point = pt;
    for (std::size_t j = 0; j < m; ++j)
      if (dot(conormals_[j], pt) == offsets_[j]) v.active.push_back(j);
    vertices_.push_back(std::move(v));
  }
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) {
              return lex_less(a.point, b.point);
            });

  std::vector<RatVector> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(v.point);
  if (affine_rank(pts) != n_)
    throw GeometryError("polytope: feasible set is not full-dimensional");

  simple_ = std::all_of(vertices_.begin(), vertices_.end(),
                        [&](const Vertex& v) { return v.active.size() == n_; });
}

std::optional<HalfSpaceSystem> HalfSpaceSystem::try_create(
    std::size_t n, std::vector<IntVector> conormals, RatVector offsets,
    std::vector<std::string> labels) {
  try {
    return HalfSpaceSystem(n, std::move(conormals), std::move(offsets),
                           std::move(labels));
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

bool HalfSpaceSystem::contains(const RatVector& x) const {
  for (std::size_t j = 0; j < facet_count(); ++j)
    if (dot(conormals_[j], x) > offsets_[j]) return false;
  return true;
}

bool HalfSpaceSystem::strictly_contains(const RatVector& x) const {
  for (std::size_t j = 0; j < facet_count(); ++j)
    if (dot(conormals_[j], x) >= offsets_[j]) return false;
  return true;
}

HalfSpaceSystem HalfSpaceSystem::with_offsets(RatVector offsets) const {
  return HalfSpaceSystem(n_, conormals_, std::move(offsets), labels_);
}

std::vector<Vertex> enumerate_vertices(const HalfSpaceSystem& sys) {
  return sys.vertices();
}

DelzantVerdict is_delzant(const HalfSpaceSystem& sys) {
  const std::size_t n = sys.dim();
  for (const Vertex& v : sys.vertices()) {
    if (v.active.size() != n) {
      std::ostringstream os;
      os << "vertex " << point_str(v.point) << " has " << v.active.size()
         << " active facets, expected " << n;
      return {false, os.str()};
    }
    std::vector<IntVector> rows;
    rows.reserve(n);
    for (std::size_t j : v.active) rows.push_back(sys.conormal(j));
    const Rational det = determinant(RatMatrix::from_rows(rows));
    if (det.abs() != Rational(1)) {
      std::ostringstream os;
      os << "vertex " << point_str(v.point)
         << ": active conormal determinant " << det
         << ", expected determinant +-1";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

CombinatorialType combinatorial_type(const HalfSpaceSystem& sys) {
  if (!sys.is_simple())
    throw GeometryError("combinatorial_type: polytope is not simple");
  CombinatorialType t;
  for (const Vertex& v : sys.vertices()) t.incidences.insert(v.active);
  return t;
}

bool same_chamber(const Chamber& ch, const RatVector& offsets) {
  if (offsets.dim() != ch.reference.facet_count())
    throw DimensionError("same_chamber: offsets length mismatch");
  const auto cand = HalfSpaceSystem::try_create(
      ch.reference.dim(), ch.reference.conormals(), offsets);
  if (!cand || !cand->is_simple()) return false;
  return combinatorial_type(*cand) == ch.ctype;
}

RatVector translate_offsets(const HalfSpaceSystem& sys, const RatVector& a) {
  if (a.dim() != sys.dim())
    throw DimensionError("translate_offsets: vector dimension mismatch");
  RatVector out(sys.facet_count());
  for (std::size_t j = 0; j < sys.facet_count(); ++j)
    out[j] = sys.offset(j) + dot(sys.conormal(j), a);
  return out;
}

std::vector<RatVector> sample_chamber(const Chamber& ch, std::size_t count,
                                      unsigned long seed) {
  if (count < 1) throw DomainError("sample_chamber: count must be >= 1");
  const RatVector& ref = ch.reference.offsets();
  const std::size_t m = ref.dim();

  Rational scale(1);
  for (std::size_t j = 0; j < m; ++j) scale = std::max(scale, ref[j].abs());
  const Rational base_radius = scale * Rational(1, 8);

  std::mt19937_64 rng(seed);
  constexpr long kGrain = 256;            // numerator resolution per draw
  constexpr std::size_t kAttempts = 64;   // per requested sample

  std::vector<RatVector> out;
  out.reserve(count);
  while (out.size() < count) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kAttempts && !accepted; ++attempt) {
      // Radius halves every four attempts.
      const Rational radius =
          base_radius * Rational(1, 2).pow(attempt / 4);
      RatVector cand(m);
      for (std::size_t j = 0; j < m; ++j) {
        const long num =
            static_cast<long>(rng() % static_cast<unsigned long>(2 * kGrain + 1)) -
            kGrain;
        cand[j] = ref[j] + radius * Rational(num, kGrain);
      }
      if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
      if (same_chamber(ch, cand)) {
        out.push_back(std::move(cand));
        accepted = true;
      }
    }
    if (!accepted)
      throw SamplingError(
          "sample_chamber: retry budget exhausted before finding " +
          std::to_string(count) + " samples");
  }
  return out;
}

}  // namespace masslin
