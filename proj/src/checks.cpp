#include "assoc/checks.hpp"

#include "assoc/realizations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace assoc {
namespace {

// Backtracking search for a facet -> diagonal assignment that makes the
// vertex/facet incidences of p match the triangulation/diagonal incidences
// of the abstract structure.  Returns the assignment and fills
// vertex_image check implicitly; nullopt if none exists.
std::optional<std::vector<int>> find_incidence_isomorphism(
    const Polytope& p, const AbstractAssociahedron& abstract) {
  const int nf = p.facet_count();
  const int nv = p.vertex_count();

  // Incidence degree of each polytope facet / abstract diagonal, plus all
  // pairwise intersection sizes (isomorphism invariants used for pruning).
  std::vector<std::vector<int>> pf(nf);  // sorted vertex ids per facet
  for (int i = 0; i < nf; ++i) pf[i] = p.facets[i].vertex_indices;
  const auto& af = abstract.incidence;  // sorted triangulation ids per diagonal

  auto inter_size = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    int c = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j])
        ++i;
      else if (a[i] > b[j])
        ++j;
      else
        ++c, ++i, ++j;
    }
    return c;
  };

  std::vector<std::vector<int>> pp(nf, std::vector<int>(nf));
  std::vector<std::vector<int>> aa(nf, std::vector<int>(nf));
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j) {
      pp[i][j] = inter_size(pf[i], pf[j]);
      aa[i][j] = inter_size(af[i], af[j]);
    }

  // Assign facets in order of fewest degree-compatible candidates first.
  std::vector<int> order(nf);
  for (int i = 0; i < nf; ++i) order[i] = i;
  std::vector<int> degree_candidates(nf, 0);
  for (int i = 0; i < nf; ++i)
    for (int d = 0; d < nf; ++d)
      if (pf[i].size() == af[d].size()) ++degree_candidates[i];
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return degree_candidates[x] < degree_candidates[y]; });

  std::vector<int> assign(nf, -1);   // facet -> diagonal
  std::vector<char> used(nf, 0);     // diagonal used

  // Map from a triangulation's diagonal-index set to its id, for the final
  // vertex-side validation.
  std::map<std::vector<int>, int> tri_by_diagset;
  {
    std::map<Diagonal, int> diag_index;
    for (int d = 0; d < nf; ++d) diag_index[abstract.facet_labels[d]] = d;
    for (std::size_t t = 0; t < abstract.vertex_labels.size(); ++t) {
      std::vector<int> key;
      for (const Diagonal& d : abstract.vertex_labels[t].diags)
        key.push_back(diag_index.at(d));
      std::sort(key.begin(), key.end());
      tri_by_diagset[key] = static_cast<int>(t);
    }
  }

  const std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == nf) {
      // Vertex-side validation: every polytope vertex's facet set must map
      // to the diagonal set of a distinct triangulation.
      std::vector<std::vector<int>> facets_of_vertex(nv);
      for (int f = 0; f < nf; ++f)
        for (int v : pf[f]) facets_of_vertex[v].push_back(f);
      std::vector<char> tri_used(abstract.vertex_labels.size(), 0);
      for (int v = 0; v < nv; ++v) {
        std::vector<int> key;
        for (int f : facets_of_vertex[v]) key.push_back(assign[f]);
        std::sort(key.begin(), key.end());
        const auto it = tri_by_diagset.find(key);
        if (it == tri_by_diagset.end() || tri_used[it->second]) return false;
        tri_used[it->second] = 1;
      }
      return true;
    }
    const int f = order[pos];
    for (int d = 0; d < nf; ++d) {
      if (used[d] || pf[f].size() != af[d].size()) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q)
        if (pp[f][order[q]] != aa[d][assign[order[q]]]) ok = false;
      if (!ok) continue;
      assign[f] = d;
      used[d] = 1;
      if (rec(pos + 1)) return true;
      assign[f] = -1;
      used[d] = 0;
    }
    return false;
  };

  if (!rec(0)) return std::nullopt;
  return assign;
}

}  // namespace

VerificationReport verify_associahedron(const Polytope& p, int n) {
  VerificationReport r;
  r.dimension = p.intrinsic_dim;
  r.vertex_count = p.vertex_count();
  r.facet_count = p.facet_count();

  // Simplicity: every vertex on exactly n facets.
  std::vector<int> facets_at(p.vertex_count(), 0);
  for (const Facet& f : p.facets)
    for (int v : f.vertex_indices) ++facets_at[v];
  r.is_simple = std::all_of(facets_at.begin(), facets_at.end(),
                            [&](int c) { return c == n; });

  const auto fail = [&](const std::string& why) {
    r.failure_reason = why;
    return r;
  };
  std::ostringstream why;
  if (p.intrinsic_dim != n) {
    why << "intrinsic dimension " << p.intrinsic_dim << " != " << n;
    return fail(why.str());
  }
  const long long want_v = catalan(n + 1);
  if (r.vertex_count != want_v) {
    why << "vertex count " << r.vertex_count << " != " << want_v;
    return fail(why.str());
  }
  const int want_f = n * (n + 3) / 2;
  if (r.facet_count != want_f) {
    why << "facet count " << r.facet_count << " != " << want_f;
    return fail(why.str());
  }
  if (!r.is_simple) return fail("not simple: some vertex is not on exactly n facets");

  const AbstractAssociahedron abstract = abstract_associahedron(n + 3);
  const auto iso = find_incidence_isomorphism(p, abstract);
  if (!iso) return fail("no incidence isomorphism with the abstract associahedron");

  std::vector<Diagonal> labels(p.facet_count());
  for (int f = 0; f < p.facet_count(); ++f) labels[f] = abstract.facet_labels[(*iso)[f]];
  r.incidence_isomorphism = std::move(labels);
  r.is_associahedron = true;
  return r;
}

std::pair<bool, std::optional<Rational>> sphericity_check(const Polytope& p) {
  if (p.vertices.empty()) throw std::invalid_argument("sphericity_check: no vertices");
  const auto norm2 = [](const RationalVector& v) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += v[i] * v[i];
    return s;
  };
  const Rational first = norm2(p.vertices.front());
  for (const RationalVector& v : p.vertices)
    if (norm2(v) != first) return {false, std::nullopt};
  return {true, first};
}

ParallelFacetReport parallel_facet_pairs(const Polytope& p) {
  ParallelFacetReport r;
  for (int i = 0; i < p.facet_count(); ++i)
    for (int j = i + 1; j < p.facet_count(); ++j)
      if (are_antiparallel(p.facets[i].normal, p.facets[j].normal))
        r.pairs.emplace_back(i, j);
  r.count = static_cast<int>(r.pairs.size());
  return r;
}

WeaklyConvexDemo weakly_convex_demo() {
  WeaklyConvexDemo demo;
  demo.config = make_point_config({
      rvec({0, 0}),
      rvec({1, 0}),
      rvec({2, 0}),
      rvec({1, 1}),
      rvec({0, 2}),
      rvec({0, 1}),
  });
  demo.polytope = secondary_polytope(demo.config);
  demo.verification = verify_associahedron(demo.polytope, 3);
  demo.parallel = parallel_facet_pairs(demo.polytope);
  return demo;
}

}  // namespace assoc
