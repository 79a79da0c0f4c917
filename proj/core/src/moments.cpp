#include "masslin/moments.hpp"

#include <algorithm>
#include <map>

namespace masslin {

namespace {

std::size_t affine_rank_of(const HalfSpaceSystem& sys,
                           const std::vector<std::size_t>& vidx) {
  if (vidx.size() <= 1) return 0;
  const auto& verts = sys.vertices();
  std::vector<RatVector> diffs;
  diffs.reserve(vidx.size() - 1);
  for (std::size_t i = 1; i < vidx.size(); ++i)
    diffs.push_back(verts[vidx[i]].point - verts[vidx[0]].point);
  return rank(RatMatrix::from_rows(diffs));
}

bool vertex_has_facet(const Vertex& v, std::size_t j) {
  return std::binary_search(v.active.begin(), v.active.end(), j);
}

// Triangulates the face spanned by `vidx` (vertex indices, sorted; the
// face is the set of vertices tight on every facet in `tight`). Cones
// the policy-chosen base vertex over triangulations of the face's own
// facets that avoid the base. Valid for any polytope since a face's
// facets are exactly its intersections with one more input facet.
void triangulate_face(const HalfSpaceSystem& sys,
                      const std::vector<std::size_t>& vidx,
                      const std::vector<std::size_t>& tight,
                      std::size_t face_dim,
                      detail::BaseVertexPolicy policy,
                      std::vector<std::vector<std::size_t>>& out) {
  if (vidx.size() == face_dim + 1) {
    out.push_back(vidx);
    return;
  }
  const auto& verts = sys.vertices();
  // Vertices are globally lex-sorted, so position picks the extreme one.
  const std::size_t base = policy == detail::BaseVertexPolicy::LexSmallest
                               ? vidx.front()
                               : vidx.back();

  std::map<std::vector<std::size_t>, std::size_t> subfaces;
  for (std::size_t j = 0; j < sys.facet_count(); ++j) {
    if (std::find(tight.begin(), tight.end(), j) != tight.end()) continue;
    if (vertex_has_facet(verts[base], j)) continue;
    std::vector<std::size_t> sub;
    for (std::size_t v : vidx)
      if (vertex_has_facet(verts[v], j)) sub.push_back(v);
    if (sub.empty() || sub.size() == vidx.size()) continue;
    if (affine_rank_of(sys, sub) != face_dim - 1) continue;
    subfaces.emplace(std::move(sub), j);
  }

  for (const auto& [sub, j] : subfaces) {
    std::vector<std::size_t> tight2 = tight;
    tight2.push_back(j);
    std::vector<std::vector<std::size_t>> pieces;
    triangulate_face(sys, sub, tight2, face_dim - 1, policy, pieces);
    for (auto& piece : pieces) {
      std::vector<std::size_t> simplex;
      simplex.reserve(piece.size() + 1);
      simplex.push_back(base);
      simplex.insert(simplex.end(), piece.begin(), piece.end());
      out.push_back(std::move(simplex));
    }
  }
}

std::vector<EmbeddedSimplex> build_simplices(
    const HalfSpaceSystem& sys, const std::vector<std::size_t>& vidx,
    const std::vector<std::size_t>& tight, std::size_t face_dim,
    std::optional<IntVector> normal, detail::BaseVertexPolicy policy) {
  std::vector<std::vector<std::size_t>> index_simplices;
  triangulate_face(sys, vidx, tight, face_dim, policy, index_simplices);
  std::vector<EmbeddedSimplex> out;
  out.reserve(index_simplices.size());
  for (const auto& s : index_simplices) {
    EmbeddedSimplex es;
    es.d = face_dim;
    es.vertices.reserve(s.size());
    for (std::size_t v : s) es.vertices.push_back(sys.vertices()[v].point);
    es.normal = normal;
    out.push_back(std::move(es));
  }
  return out;
}

void accumulate(MomentData& total, const MomentData& part) {
  total.volume += part.volume;
  total.first += part.first;
  if (total.second) {
    for (std::size_t i = 0; i < total.second->rows(); ++i)
      for (std::size_t j = 0; j < total.second->cols(); ++j)
        total.second->at(i, j) += part.second->at(i, j);
  }
}

MomentData sum_over(const std::vector<EmbeddedSimplex>& pieces,
                    std::size_t n, std::size_t d, int degree) {
  MomentData total;
  total.d = d;
  total.volume = Rational(0);
  total.first = RatVector(n);
  if (degree >= 2) total.second = RatMatrix(n, n);
  for (const auto& s : pieces) accumulate(total, simplex_moments(s, degree));
  return total;
}

}  // namespace

std::vector<EmbeddedSimplex> detail::triangulate_with_policy(
    const HalfSpaceSystem& sys, detail::BaseVertexPolicy policy) {
  std::vector<std::size_t> all(sys.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return build_simplices(sys, all, {}, sys.dim(), std::nullopt, policy);
}

std::vector<EmbeddedSimplex> triangulate(const HalfSpaceSystem& sys) {
  return detail::triangulate_with_policy(sys,
                                         detail::BaseVertexPolicy::LexSmallest);
}

MomentData simplex_moments(const EmbeddedSimplex& s, int degree) {
  if (degree < 0 || degree > 2)
    throw DomainError("simplex_moments: degree must be 0, 1, or 2");
  if (s.vertices.size() != s.d + 1)
    throw DimensionError("simplex_moments: vertex count must be d+1");
  const std::size_t n = s.vertices[0].dim();
  const std::size_t d = s.d;

  Rational vol;
  if (d == n) {
    RatMatrix edges(d, n);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < n; ++i)
        edges.at(k, i) = s.vertices[k + 1][i] - s.vertices[0][i];
    vol = determinant(edges).abs() / Rational(factorial(d));
  } else if (d + 1 == n && s.normal.has_value()) {
    // Lattice measure: |det(edges, nu)| / ((nu.nu) d!). Appending the
    // conormal converts (n-1)-measure along the facet hyperplane into a
    // full determinant scaled by |nu|^2 / |nu|.
    RatMatrix mtx(n, n);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < n; ++i)
        mtx.at(k, i) = s.vertices[k + 1][i] - s.vertices[0][i];
    const IntVector& nu = *s.normal;
    for (std::size_t i = 0; i < n; ++i) mtx.at(d, i) = Rational(nu[i]);
    const Rational nu2(dot(nu, nu));
    vol = determinant(mtx).abs() / (nu2 * Rational(factorial(d)));
  } else {
    throw GeometryError(
        "simplex_moments: need d = n, or d = n-1 with a normal");
  }
  if (vol.is_zero()) throw GeometryError("simplex_moments: degenerate simplex");

  MomentData out;
  out.d = d;
  out.volume = vol;
  out.first = RatVector(n);

  RatVector vsum(n);
  for (const auto& v : s.vertices) vsum += v;
  const Rational inv_cnt(1, static_cast<long>(d + 1));
  for (std::size_t i = 0; i < n; ++i) out.first[i] = vol * vsum[i] * inv_cnt;

  if (degree >= 2) {
    RatMatrix sec(n, n);
    const Rational f =
        vol / Rational(static_cast<long>((d + 1) * (d + 2)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Rational pair_sum(0);
        for (const auto& v : s.vertices) pair_sum += v[i] * v[j];
        const Rational val = f * (pair_sum + vsum[i] * vsum[j]);
        sec.at(i, j) = val;
        sec.at(j, i) = val;
      }
    }
    out.second = std::move(sec);
  }
  return out;
}

MomentData polytope_moments(const HalfSpaceSystem& sys, int degree) {
  return sum_over(triangulate(sys), sys.dim(), sys.dim(), degree);
}

MomentData facet_lattice_moments(const HalfSpaceSystem& sys, std::size_t j,
                                 int degree) {
  if (j >= sys.facet_count())
    throw DimensionError("facet_lattice_moments: facet index out of range");
  const std::size_t n = sys.dim();
  std::vector<std::size_t> vidx;
  for (std::size_t i = 0; i < sys.vertices().size(); ++i)
    if (vertex_has_facet(sys.vertices()[i], j)) vidx.push_back(i);
  if (vidx.empty() || affine_rank_of(sys, vidx) != n - 1)
    throw GeometryError(
        "facet_lattice_moments: facet is empty or lower-dimensional");
  const auto pieces =
      build_simplices(sys, vidx, {j}, n - 1, sys.conormal(j),
                      detail::BaseVertexPolicy::LexSmallest);
  return sum_over(pieces, n, n - 1, degree);
}

RatVector center_of_mass(const HalfSpaceSystem& sys) {
  const MomentData m = polytope_moments(sys, 1);
  return m.first * (Rational(1) / m.volume);
}

RatVector facet_center_of_mass(const HalfSpaceSystem& sys, std::size_t j) {
  const MomentData m = facet_lattice_moments(sys, j, 1);
  return m.first * (Rational(1) / m.volume);
}

}  // namespace masslin
