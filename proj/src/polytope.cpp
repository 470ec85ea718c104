#include "assoc/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace assoc {
namespace {

// Working facet during the incremental construction, in local coordinates.
struct WFacet {
  RationalVector normal;        // primitive integer, outward
  Rational offset;              // normal . x == offset on the facet
  std::vector<int> incidence;   // sorted indices into the deduped point list
};

// Side of point x relative to facet f: sign(normal.x - offset).
int side(const WFacet& f, const RationalVector& x) {
  const Rational s = f.normal.dot(x) - f.offset;
  if (s > 0) return 1;
  if (s < 0) return -1;
  return 0;
}

// Sorted intersection of two sorted int vectors.
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Key for exact facet deduplication.
struct HyperplaneKey {
  std::vector<Rational> coeffs;  // normal entries then offset
  bool operator<(const HyperplaneKey& o) const {
    return std::lexicographical_compare(coeffs.begin(), coeffs.end(), o.coeffs.begin(),
                                        o.coeffs.end());
  }
};

HyperplaneKey make_key(const WFacet& f) {
  HyperplaneKey k;
  k.coeffs.reserve(f.normal.size() + 1);
  for (Eigen::Index i = 0; i < f.normal.size(); ++i) k.coeffs.push_back(f.normal[i]);
  k.coeffs.push_back(f.offset);
  return k;
}

// Builds the oriented, deduplicated facet through the affine span of
// ridge_points + apex, or returns false if the hyperplane is degenerate
// (cannot happen for true horizon ridges; kept as a guard).
bool facet_through(const std::vector<RationalVector>& local, const std::vector<int>& ridge,
                   const RationalVector& apex, const RationalVector& interior, int r,
                   WFacet* out) {
  std::vector<RationalVector> dirs;
  dirs.reserve(r - 1);
  RationalVector base;
  if (ridge.empty()) {
    base = apex;  // r == 1: the facet is the apex point itself
  } else {
    base = local[ridge[0]];
    IncrementalRank acc(r);
    for (std::size_t i = 1; i < ridge.size() && static_cast<int>(dirs.size()) < r - 2; ++i) {
      const RationalVector d = local[ridge[i]] - base;
      if (acc.add(d)) dirs.push_back(d);
    }
    dirs.push_back(apex - base);
  }
  RationalVector n = normal_from_directions(dirs, r);
  bool zero = true;
  for (Eigen::Index i = 0; i < n.size(); ++i)
    if (n[i] != 0) {
      zero = false;
      break;
    }
  if (zero) return false;
  Rational beta = n.dot(base);
  const Rational at_interior = n.dot(interior) - beta;
  if (at_interior == 0)
    throw std::logic_error("convex_hull: interior point on a supporting hyperplane");
  if (at_interior > 0) {
    n = -n;
    beta = -beta;
  }
  const Rational s = primitive_scale(n);
  out->normal = n * s;
  out->offset = beta * s;
  return true;
}

}  // namespace

Polytope convex_hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const Eigen::Index dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("convex_hull: mixed ambient dimensions");

  // Deduplicate and sort lexicographically; vertex order of the result is
  // inherited from this ordering.
  std::vector<RationalVector> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RationalVector& a, const RationalVector& b) {
                          return vec_eq(a, b);
                        }),
            pts.end());
  const int npts = static_cast<int>(pts.size());

  Polytope result;
  result.ambient_dim = static_cast<int>(dim);

  const std::vector<int> chosen = greedy_affine_basis(pts);
  const int r = static_cast<int>(chosen.size()) - 1;
  result.intrinsic_dim = r;

  const RationalVector& base = pts[chosen[0]];
  std::vector<RationalVector> basis;
  basis.reserve(r);
  for (int i = 1; i <= r; ++i) basis.push_back(pts[chosen[i]] - base);
  result.affine_hull.point = base;
  result.affine_hull.basis = basis;

  if (r == 0) {
    result.vertices = {base};
    return result;
  }

  // Local coordinates: p = base + B c with B the dim x r basis matrix;
  // c = (B^T B)^{-1} B^T (p - base), solved exactly.
  RationalMatrix bmat(dim, r);
  for (int j = 0; j < r; ++j) bmat.col(j) = basis[j];
  const RationalMatrix btb = bmat.transpose() * bmat;
  const Eigen::FullPivLU<RationalMatrix> btb_lu(btb);
  std::vector<RationalVector> local(npts);
  for (int i = 0; i < npts; ++i)
    local[i] = btb_lu.solve(bmat.transpose() * (pts[i] - base));

  // Insertion order: affine basis points first (they form the start
  // simplex), then everything else.
  std::vector<char> is_chosen(npts, 0);
  for (int c : chosen) is_chosen[c] = 1;
  std::vector<int> order = chosen;
  for (int i = 0; i < npts; ++i)
    if (!is_chosen[i]) order.push_back(i);

  RationalVector interior = RationalVector::Zero(r);
  for (int c : chosen) interior += local[c];
  interior /= Rational(r + 1);

  // Start simplex: one facet per r-subset of the basis points.
  std::vector<WFacet> facets;
  for (int omit = 0; omit <= r; ++omit) {
    std::vector<int> ridge;
    for (int i = 0; i <= r; ++i)
      if (i != omit) ridge.push_back(chosen[i]);
    const int apex_idx = ridge.back();
    ridge.pop_back();
    WFacet f;
    const bool ok =
        facet_through(local, ridge, local[apex_idx], interior, r, &f);
    assert(ok && "degenerate start simplex facet");
    if (!ok) throw std::logic_error("convex_hull: degenerate start simplex");
    f.incidence = ridge;
    f.incidence.push_back(apex_idx);
    std::sort(f.incidence.begin(), f.incidence.end());
    facets.push_back(std::move(f));
  }

  std::vector<char> processed(npts, 0);
  for (int c : chosen) processed[c] = 1;

  for (std::size_t oi = r + 1; oi < order.size(); ++oi) {
    const int pi = order[oi];
    const RationalVector& p = local[pi];

    std::vector<int> visible, coplanar, hidden;
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      const int s = side(facets[fi], p);
      if (s > 0)
        visible.push_back(fi);
      else if (s == 0)
        coplanar.push_back(fi);
      else
        hidden.push_back(fi);
    }

    if (visible.empty()) {
      // p is inside the current hull; it may still lie on facets.
      for (int fi : coplanar) {
        auto& inc = facets[fi].incidence;
        inc.insert(std::upper_bound(inc.begin(), inc.end(), pi), pi);
      }
      processed[pi] = 1;
      continue;
    }

    std::vector<int> kept = hidden;
    kept.insert(kept.end(), coplanar.begin(), coplanar.end());

    // Horizon ridges: (visible, kept) facet pairs whose shared incidence
    // spans an (r-2)-dimensional affine set.  Each yields one new facet
    // through the ridge and p.
    std::map<HyperplaneKey, WFacet> new_facets;
    for (int vi : visible) {
      for (int ki : kept) {
        const std::vector<int> shared =
            sorted_intersection(facets[vi].incidence, facets[ki].incidence);
        if (r >= 2) {
          if (static_cast<int>(shared.size()) < r - 1) continue;
          IncrementalRank acc(r);
          int arank = 0;
          for (std::size_t i = 1; i < shared.size(); ++i)
            if (acc.add(local[shared[i]] - local[shared[0]])) ++arank;
          if (arank != r - 2) continue;
        }
        WFacet nf;
        if (!facet_through(local, shared, p, interior, r, &nf)) continue;
        const HyperplaneKey key = make_key(nf);
        if (new_facets.count(key)) continue;
        // Skip if the hyperplane coincides with a kept facet (the point
        // merely extends it; coplanar facets already absorb p below).
        bool dup_kept = false;
        for (int ki2 : kept)
          if (facets[ki2].offset == nf.offset && vec_eq(facets[ki2].normal, nf.normal)) {
            dup_kept = true;
            break;
          }
        if (dup_kept) continue;
        // Incidence: every processed point (plus p) lying on the hyperplane.
        for (int j = 0; j < npts; ++j)
          if ((processed[j] || j == pi) && side(nf, local[j]) == 0)
            nf.incidence.push_back(j);
        new_facets.emplace(key, std::move(nf));
      }
    }

    std::vector<WFacet> next;
    next.reserve(kept.size() + new_facets.size());
    for (int ki : kept) {
      WFacet f = std::move(facets[ki]);
      if (side(f, p) == 0)
        f.incidence.insert(std::upper_bound(f.incidence.begin(), f.incidence.end(), pi), pi);
      next.push_back(std::move(f));
    }
    for (auto& [key, f] : new_facets) next.push_back(std::move(f));
    facets = std::move(next);
    processed[pi] = 1;
  }

  // Vertices: points whose incident facet normals span the full local space.
  std::vector<std::vector<int>> facets_of_point(npts);
  for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi)
    for (int j : facets[fi].incidence) facets_of_point[j].push_back(fi);

  std::vector<int> vertex_id(npts, -1);
  std::vector<int> vertex_points;
  for (int j = 0; j < npts; ++j) {
    if (static_cast<int>(facets_of_point[j].size()) < r) continue;
    IncrementalRank acc(r);
    for (int fi : facets_of_point[j]) {
      acc.add(facets[fi].normal);
      if (acc.rank() == r) break;
    }
    if (acc.rank() == r) {
      vertex_id[j] = static_cast<int>(vertex_points.size());
      vertex_points.push_back(j);
    }
  }
  for (int j : vertex_points) result.vertices.push_back(pts[j]);

  // Map facets back to ambient coordinates: the ambient normal is the
  // unique vector w in span(B) with w . (base + B c) = const matching the
  // local inequality, i.e. w = B (B^T B)^{-1} n.
  for (const WFacet& f : facets) {
    const RationalVector y = btb_lu.solve(f.normal);
    RationalVector w = bmat * y;
    Rational beta = f.offset + w.dot(base);
    const Rational s = primitive_scale(w);
    w *= s;
    beta *= s;
    Facet out;
    out.normal = std::move(w);
    out.offset = beta;
    for (int j : f.incidence)
      if (vertex_id[j] >= 0) out.vertex_indices.push_back(vertex_id[j]);
    std::sort(out.vertex_indices.begin(), out.vertex_indices.end());
    result.facets.push_back(std::move(out));
  }
  std::sort(result.facets.begin(), result.facets.end(), [](const Facet& a, const Facet& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
  });
  return result;
}

bool are_antiparallel(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("are_antiparallel: dimension mismatch");
  bool u_zero = true, v_zero = true;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] != 0) u_zero = false;
    if (v[i] != 0) v_zero = false;
  }
  if (u_zero || v_zero) throw std::invalid_argument("are_antiparallel: zero vector");
  return vec_eq(primitive(u), primitive(-v));
}

Rational cross2(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

Rational triangle_area(const RationalVector& a, const RationalVector& b,
                       const RationalVector& c) {
  Rational twice = cross2(a, b, c);
  if (twice < 0) twice = -twice;
  return twice / 2;
}

bool contains_point(const Polytope& p, const RationalVector& x) {
  if (x.size() != p.ambient_dim) return false;
  if (p.intrinsic_dim < 0) return false;
  // Affine hull membership: x - base must lie in span(basis).
  IncrementalRank acc(p.ambient_dim);
  for (const auto& b : p.affine_hull.basis) acc.add(b);
  const int span_rank = acc.rank();
  if (acc.add(x - p.affine_hull.point) || acc.rank() != span_rank) return false;
  if (p.intrinsic_dim == 0) return vec_eq(x, p.vertices.front());
  for (const Facet& f : p.facets)
    if (f.normal.dot(x) > f.offset) return false;
  return true;
}

}  // namespace assoc
