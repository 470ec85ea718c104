#include "assoc/pointconfig.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace assoc {
namespace {

std::vector<Rational> key_of(const RationalVector& v) {
  return {v[0], v[1]};
}

// Exact counterclockwise angular order on nonzero integer vectors,
// starting at direction (1, 0).
bool angular_less(const RationalVector& a, const RationalVector& b) {
  const auto half = [](const RationalVector& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  const Rational cross = a[0] * b[1] - a[1] * b[0];
  return cross > 0;
}

}  // namespace

PointConfig2D make_point_config(const std::vector<RationalVector>& pts) {
  const int m = static_cast<int>(pts.size());
  if (m < 3) throw std::invalid_argument("point config: need at least 3 points");
  for (const auto& p : pts)
    if (p.size() != 2) throw std::invalid_argument("point config: points must be planar");
  std::map<std::vector<Rational>, int> seen;
  for (int i = 0; i < m; ++i)
    if (!seen.emplace(key_of(pts[i]), i).second)
      throw std::invalid_argument("point config: duplicate point");

  const Polytope hull = convex_hull(pts);
  if (hull.intrinsic_dim != 2)
    throw std::invalid_argument("point config: points are collinear");

  // Identify corners (hull vertices) among the inputs.
  std::map<std::vector<Rational>, int> corner_of;  // hull vertex id by coords
  for (int v = 0; v < hull.vertex_count(); ++v)
    corner_of[key_of(hull.vertices[v])] = v;

  // Each facet of a 2-polytope is an edge with exactly two vertices.  Walk
  // the corner cycle via shared facet membership.
  const int nc = hull.vertex_count();
  std::vector<std::vector<int>> nbr(nc);
  for (const Facet& f : hull.facets) {
    if (f.vertex_indices.size() != 2)
      throw std::logic_error("point config: malformed hull edge");
    nbr[f.vertex_indices[0]].push_back(f.vertex_indices[1]);
    nbr[f.vertex_indices[1]].push_back(f.vertex_indices[0]);
  }
  std::vector<int> cycle = {0, nbr[0][0]};
  while (static_cast<int>(cycle.size()) < nc) {
    const int cur = cycle.back(), prev = cycle[cycle.size() - 2];
    cycle.push_back(nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0]);
  }
  // Orient counterclockwise.
  Rational doubled_area = 0;
  for (int i = 0; i < nc; ++i) {
    const RationalVector& u = hull.vertices[cycle[i]];
    const RationalVector& w = hull.vertices[cycle[(i + 1) % nc]];
    doubled_area += u[0] * w[1] - u[1] * w[0];
  }
  if (doubled_area < 0) std::reverse(cycle.begin(), cycle.end());

  // Place non-corner inputs: each must sit in the relative interior of
  // exactly one hull edge, at most one per edge.
  std::map<std::pair<int, int>, std::vector<int>> extras;  // edge (corner ids) -> inputs
  for (int i = 0; i < m; ++i) {
    if (corner_of.count(key_of(pts[i]))) continue;
    const Facet* on = nullptr;
    for (const Facet& f : hull.facets)
      if (f.normal.dot(pts[i]) == f.offset) {
        if (on) throw std::logic_error("point config: non-corner point on two edges");
        on = &f;
      }
    if (!on) throw std::invalid_argument("point config: point inside the hull");
    extras[{on->vertex_indices[0], on->vertex_indices[1]}].push_back(i);
  }
  for (const auto& [edge, list] : extras)
    if (list.size() > 1)
      throw std::invalid_argument("point config: more than one point inside a hull edge");

  // Build the full ccw boundary cycle of input indices.  Every hull vertex
  // is one of the inputs, so the lookup through `seen` always succeeds.
  std::vector<int> boundary;
  for (int i = 0; i < nc; ++i) {
    const int cv = cycle[i], cw = cycle[(i + 1) % nc];
    boundary.push_back(seen.at(key_of(hull.vertices[cv])));
    const auto ex = extras.find({std::min(cv, cw), std::max(cv, cw)});
    if (ex != extras.end()) boundary.push_back(ex->second.front());
  }
  if (static_cast<int>(boundary.size()) != m)
    throw std::invalid_argument("point config: boundary structure mismatch");

  // The input order must equal the ccw boundary cycle up to rotation.
  const int start = static_cast<int>(
      std::find(boundary.begin(), boundary.end(), 0) - boundary.begin());
  for (int i = 0; i < m; ++i)
    if (boundary[(start + i) % m] != i)
      throw std::invalid_argument("point config: points are not in ccw boundary order");

  PointConfig2D config;
  config.points = pts;
  return config;
}

Rational hull_area(const PointConfig2D& config) {
  const int m = config.size();
  Rational doubled = 0;
  for (int i = 0; i < m; ++i) {
    const RationalVector& u = config.points[i];
    const RationalVector& w = config.points[(i + 1) % m];
    doubled += u[0] * w[1] - u[1] * w[0];
  }
  if (doubled < 0) doubled = -doubled;  // defensive; validated configs are ccw
  return doubled / 2;
}

std::vector<int> corner_labels(const PointConfig2D& config) {
  const int m = config.size();
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    const RationalVector& prev = config.points[(i + m - 1) % m];
    const RationalVector& next = config.points[(i + 1) % m];
    if (cross2(prev, config.points[i], next) != 0) out.push_back(i + 1);
  }
  return out;
}

namespace {

// Separating-axis test specialised to ccw triangles: interiors are disjoint
// iff some edge line of one triangle has the whole other triangle in the
// opposite closed halfplane.
bool separated_by_edge(const std::array<const RationalVector*, 3>& a,
                       const std::array<const RationalVector*, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    const RationalVector& u = *a[i];
    const RationalVector& v = *a[(i + 1) % 3];
    bool outside = true;
    for (int j = 0; j < 3 && outside; ++j)
      if (cross2(u, v, *b[j]) > 0) outside = false;
    if (outside) return true;
  }
  return false;
}

}  // namespace

std::vector<ConfigTriangulation> enumerate_config_triangulations(const PointConfig2D& config) {
  const int m = config.size();
  const Rational total = hull_area(config);

  // Candidate triangles: all label triples spanning positive area, with the
  // vertex order normalised to ccw for the separation test.
  struct Candidate {
    std::array<int, 3> labels;              // sorted, 1-based
    std::array<const RationalVector*, 3> ccw;
    Rational area;
  };
  std::vector<Candidate> cands;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k) {
        const Rational twice = cross2(config.at(i), config.at(j), config.at(k));
        if (twice == 0) continue;
        Candidate c;
        c.labels = {i, j, k};
        c.ccw = twice > 0
                    ? std::array<const RationalVector*, 3>{&config.at(i), &config.at(j),
                                                           &config.at(k)}
                    : std::array<const RationalVector*, 3>{&config.at(i), &config.at(k),
                                                           &config.at(j)};
        c.area = (twice > 0 ? twice : -twice) / 2;
        cands.push_back(std::move(c));
      }
  const int nc = static_cast<int>(cands.size());

  std::vector<std::vector<char>> compatible(nc, std::vector<char>(nc, 0));
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      const bool ok = separated_by_edge(cands[i].ccw, cands[j].ccw) ||
                      separated_by_edge(cands[j].ccw, cands[i].ccw);
      compatible[i][j] = compatible[j][i] = ok;
    }

  std::vector<ConfigTriangulation> out;
  std::vector<int> chosen;

  // Depth-first over candidates in index (= lexicographic) order.  A chosen
  // set of pairwise interior-disjoint triangles is a triangulation exactly
  // when its areas sum to the hull area.
  const std::function<void(int, const Rational&)> rec = [&](int start, const Rational& acc) {
    if (acc == total) {
      ConfigTriangulation t;
      for (int c : chosen) t.triangles.push_back(cands[c].labels);
      for (const auto& tri : t.triangles)
        for (int l : tri) t.used_labels.push_back(l);
      std::sort(t.used_labels.begin(), t.used_labels.end());
      t.used_labels.erase(std::unique(t.used_labels.begin(), t.used_labels.end()),
                          t.used_labels.end());
      out.push_back(std::move(t));
      return;
    }
    // Feasibility: the remaining compatible candidates must be able to fill
    // the missing area.
    Rational available = 0;
    for (int c = start; c < nc; ++c) {
      bool ok = true;
      for (int ch : chosen)
        if (!compatible[ch][c]) {
          ok = false;
          break;
        }
      if (ok) available += cands[c].area;
    }
    if (acc + available < total) return;
    for (int c = start; c < nc; ++c) {
      bool ok = true;
      for (int ch : chosen)
        if (!compatible[ch][c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      rec(c + 1, acc + cands[c].area);
      chosen.pop_back();
    }
  };
  rec(0, Rational(0));
  return out;
}

PointConfig2D parabola_config(int m, const Rational& a, const Rational& b,
                              const std::optional<AffineMap2D>& map) {
  if (m < 4) throw std::invalid_argument("parabola config: need m >= 4");
  if (b == 0)
    throw std::invalid_argument("parabola config: coincident points (step b must be nonzero)");
  Rational det = 1;
  if (map) {
    if (map->linear.rows() != 2 || map->linear.cols() != 2 || map->shift.size() != 2)
      throw std::invalid_argument("parabola config: affine map must be 2x2 plus shift");
    det = map->linear(0, 0) * map->linear(1, 1) - map->linear(0, 1) * map->linear(1, 0);
    if (det == 0) throw std::invalid_argument("parabola config: singular affine map");
  }
  std::vector<RationalVector> pts;
  for (int i = 0; i < m; ++i) {
    const Rational t = a + Rational(i) * b;
    RationalVector p = rvec({t, t * t});
    if (map) p = (map->linear * p + map->shift).eval();
    pts.push_back(std::move(p));
  }
  // Increasing abscissa along the parabola runs counterclockwise; a
  // negative step or an orientation-reversing map flips that.
  if ((b < 0) != (det < 0)) std::reverse(pts.begin(), pts.end());
  return make_point_config(pts);
}

PointConfig2D random_convex_polygon(int m, std::uint64_t seed) {
  if (m < 3) throw std::invalid_argument("random polygon: need m >= 3");
  std::mt19937_64 eng(seed);
  const auto coord = [&]() { return static_cast<int>(eng() % 101) - 50; };

  for (int attempt = 0; attempt < 10000; ++attempt) {
    // Random edge vectors summing to zero; sorted by direction they bound a
    // convex polygon, provided all directions are distinct.
    std::vector<RationalVector> edges;
    RationalVector sum = RationalVector::Zero(2);
    for (int i = 0; i + 1 < m; ++i) {
      RationalVector e = rvec({Rational(coord()), Rational(coord())});
      if (e[0] == 0 && e[1] == 0) e[0] = 1;
      sum += e;
      edges.push_back(std::move(e));
    }
    edges.push_back(-sum);
    if (edges.back()[0] == 0 && edges.back()[1] == 0) continue;

    std::sort(edges.begin(), edges.end(), angular_less);
    bool distinct_directions = true;
    for (int i = 0; i + 1 < m && distinct_directions; ++i)
      if (edges[i][0] * edges[i + 1][1] - edges[i][1] * edges[i + 1][0] == 0)
        distinct_directions = false;
    if (!distinct_directions) continue;

    std::vector<RationalVector> pts;
    RationalVector v = RationalVector::Zero(2);
    for (int i = 0; i < m; ++i) {
      pts.push_back(v);
      v += edges[i];
    }
    return make_point_config(pts);
  }
  throw std::runtime_error("random polygon: generation failed");
}

}  // namespace assoc
