#include "assoc/realizations.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>
#include <stdexcept>

namespace assoc {
namespace {

bool triangles_interior_disjoint(const PointConfig2D& config, const std::array<int, 3>& s,
                                 const std::array<int, 3>& t) {
  // Separating-axis test on ccw-oriented triangles, exact.
  const auto oriented = [&](const std::array<int, 3>& tri) {
    std::array<const RationalVector*, 3> v = {&config.at(tri[0]), &config.at(tri[1]),
                                              &config.at(tri[2])};
    if (cross2(*v[0], *v[1], *v[2]) < 0) std::swap(v[1], v[2]);
    return v;
  };
  const auto a = oriented(s), b = oriented(t);
  const auto separated = [](const std::array<const RationalVector*, 3>& x,
                            const std::array<const RationalVector*, 3>& y) {
    for (int i = 0; i < 3; ++i) {
      bool out = true;
      for (int j = 0; j < 3 && out; ++j)
        if (cross2(*x[i], *x[(i + 1) % 3], *y[j]) > 0) out = false;
      if (out) return true;
    }
    return false;
  };
  return separated(a, b) || separated(b, a);
}

void validate_triangulation(const PointConfig2D& config, const ConfigTriangulation& t) {
  const int m = config.size();
  const auto bad = [](const std::string& why) {
    throw std::invalid_argument("invalid triangulation: " + why);
  };
  if (t.triangles.empty()) bad("no triangles");
  for (const auto& tri : t.triangles) {
    if (!(1 <= tri[0] && tri[0] < tri[1] && tri[1] < tri[2] && tri[2] <= m))
      bad("triangle labels out of range or unsorted");
    if (triangle_area(config.at(tri[0]), config.at(tri[1]), config.at(tri[2])) == 0)
      bad("degenerate triangle");
  }
  for (std::size_t i = 0; i < t.triangles.size(); ++i)
    for (std::size_t j = i + 1; j < t.triangles.size(); ++j) {
      if (t.triangles[i] == t.triangles[j]) bad("repeated triangle");
      if (!triangles_interior_disjoint(config, t.triangles[i], t.triangles[j]))
        bad("overlapping triangles");
    }
  Rational covered = 0;
  for (const auto& tri : t.triangles)
    covered += triangle_area(config.at(tri[0]), config.at(tri[1]), config.at(tri[2]));
  if (covered != hull_area(config)) bad("triangles do not cover the hull");
  std::vector<int> used;
  for (const auto& tri : t.triangles)
    for (int l : tri) used.push_back(l);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used != t.used_labels) bad("used_labels does not match the triangles");
}

}  // namespace

RationalVector gkz_vector(const PointConfig2D& config, const ConfigTriangulation& t) {
  validate_triangulation(config, t);
  const int m = config.size();
  // area_at[i] = total area of the triangles containing point i+1.
  std::vector<Rational> area_at(m, Rational(0));
  for (const auto& tri : t.triangles) {
    const Rational a = triangle_area(config.at(tri[0]), config.at(tri[1]), config.at(tri[2]));
    for (int l : tri) area_at[l - 1] += a;
  }
  // Coordinate l of sum_i area_at[i] * f_i (f_i = e_1 + ... + e_i) is the
  // sum of area_at over i >= l.
  RationalVector v(m);
  Rational suffix = 0;
  for (int l = m; l >= 1; --l) {
    suffix += area_at[l - 1];
    v[l - 1] = suffix;
  }
  return v;
}

Polytope secondary_polytope(const PointConfig2D& config, int threads) {
  if (config.size() < 4)
    throw std::invalid_argument("secondary_polytope: dimension < 1 (need at least 4 points)");
  if (threads < 1) throw std::invalid_argument("secondary_polytope: threads must be >= 1");
  const std::vector<ConfigTriangulation> tris = enumerate_config_triangulations(config);
  std::vector<RationalVector> gkz(tris.size());
  const auto compute_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) gkz[i] = gkz_vector(config, tris[i]);
  };
  const std::size_t nt = std::min<std::size_t>(threads, tris.size());
  if (nt <= 1) {
    compute_range(0, tris.size());
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (tris.size() + nt - 1) / nt;
    for (std::size_t w = 0; w < nt; ++w)
      workers.emplace_back(compute_range, w * chunk,
                           std::min(tris.size(), (w + 1) * chunk));
    for (std::thread& t : workers) t.join();
  }
  return convex_hull(gkz);
}

ClusterParams default_cluster_params(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("default cluster parameters are shipped for 1 <= n <= 5");
  // Frozen tables.  A naive uniform table collapses vertices for n >= 3 (the
  // hexagonal face structure degenerates), so these were chosen so that every
  // inequality is facet-defining and the region is simple with the right
  // combinatorics; the test suite re-verifies all five via
  // verify_associahedron rather than trusting the constants.
  ClusterParams p;
  p.n = n;
  using Row = std::pair<std::pair<int, int>, int>;
  static const std::vector<Row> tables[5] = {
      {{{1, 2}, 7}, {{2, 1}, 7}},
      {{{1, 2}, 16}, {{2, 1}, 16}, {{2, 3}, 9}, {{3, 1}, 9}, {{3, 2}, 9}},
      {{{1, 2}, 27},
       {{2, 1}, 27},
       {{2, 3}, 20},
       {{3, 1}, 11},
       {{3, 2}, 20},
       {{3, 4}, 11},
       {{4, 1}, 20},
       {{4, 2}, 11},
       {{4, 3}, 11}},
      {{{1, 2}, 40},
       {{2, 1}, 40},
       {{2, 3}, 33},
       {{3, 1}, 13},
       {{3, 2}, 33},
       {{3, 4}, 24},
       {{4, 1}, 33},
       {{4, 2}, 13},
       {{4, 3}, 24},
       {{4, 5}, 13},
       {{5, 1}, 24},
       {{5, 2}, 24},
       {{5, 3}, 13},
       {{5, 4}, 13}},
      {{{1, 2}, 55},
       {{2, 1}, 55},
       {{2, 3}, 48},
       {{3, 1}, 15},
       {{3, 2}, 48},
       {{3, 4}, 39},
       {{4, 1}, 48},
       {{4, 2}, 15},
       {{4, 3}, 39},
       {{4, 5}, 28},
       {{5, 1}, 28},
       {{5, 2}, 39},
       {{5, 3}, 15},
       {{5, 4}, 28},
       {{5, 6}, 15},
       {{6, 1}, 39},
       {{6, 2}, 28},
       {{6, 3}, 28},
       {{6, 4}, 15},
       {{6, 5}, 15}}};
  for (const Row& row : tables[n - 1]) p.f[row.first] = row.second;
  return p;
}

Polytope cluster_associahedron(const ClusterParams& params) {
  const int n = params.n;
  if (n < 1) throw std::invalid_argument("cluster parameters: need n >= 1");
  // The index set is all ordered pairs (i, j), i != j, i - j >= -1.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j && i - j >= -1) pairs.emplace_back(i, j);
  if (params.f.size() != pairs.size())
    throw std::invalid_argument("cluster parameters: expected exactly n(n+3)/2 pairs");
  for (const auto& pr : pairs) {
    const auto it = params.f.find(pr);
    if (it == params.f.end()) {
      std::ostringstream why;
      why << "cluster parameters: missing pair (" << pr.first << "," << pr.second << ")";
      throw std::invalid_argument(why.str());
    }
    if (it->second <= 0) {
      std::ostringstream why;
      why << "cluster parameters: f(" << pr.first << "," << pr.second << ") must be positive";
      throw std::invalid_argument(why.str());
    }
  }

  // Inequality rows: (e_i - e_j) . x <= f_(i,j), inside sum x = 0.
  const int na = n + 1;
  std::vector<RationalVector> normals;
  std::vector<Rational> rhs;
  for (const auto& [i, j] : pairs) {
    RationalVector a = RationalVector::Zero(na);
    a[i - 1] = 1;
    a[j - 1] = -1;
    normals.push_back(std::move(a));
    rhs.push_back(params.f.at({i, j}));
  }
  const int ni = static_cast<int>(normals.size());

  // Vertex enumeration: each vertex is the unique solution of n binding
  // inequalities together with the hyperplane sum x = 0; keep solutions
  // satisfying everything.  (The region is always bounded: adjacent
  // differences x_{i+1} - x_i are bounded in both directions.)
  std::vector<RationalVector> vertices;
  std::vector<int> subset(n);
  RationalMatrix mat(na, na);
  RationalVector b(na);
  const std::function<void(int, int)> walk = [&](int pos, int start) {
    if (pos == n) {
      for (int r = 0; r < n; ++r) {
        mat.row(r) = normals[subset[r]].transpose();
        b[r] = rhs[subset[r]];
      }
      mat.row(n).setOnes();
      b[n] = 0;
      const Eigen::FullPivLU<RationalMatrix> lu(mat);
      if (lu.rank() != na) return;
      const RationalVector x = lu.solve(b);
      for (int t = 0; t < ni; ++t)
        if (normals[t].dot(x) > rhs[t]) return;
      vertices.push_back(x);
      return;
    }
    for (int s = start; s < ni; ++s) {
      subset[pos] = s;
      walk(pos + 1, s + 1);
    }
  };
  walk(0, 0);
  if (vertices.empty()) throw math_check_error("parameters do not define a polytope");

  const Polytope hull = convex_hull(vertices);
  if (hull.intrinsic_dim != n) throw math_check_error("parameters do not define a polytope");

  // Every inequality must be facet-defining (normals are already primitive
  // integer vectors inside the sum-zero direction space).
  for (int t = 0; t < ni; ++t) {
    bool found = false;
    for (const Facet& f : hull.facets)
      if (f.offset == rhs[t] && vec_eq(f.normal, normals[t])) {
        found = true;
        break;
      }
    if (!found) {
      std::ostringstream why;
      why << "parameters not suitable: inequality (" << pairs[t].first << ","
          << pairs[t].second << ") is not facet-defining";
      throw math_check_error(why.str());
    }
  }
  return hull;
}

MinkowskiParams default_minkowski_params(int n) {
  MinkowskiParams p;
  p.n = n;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) p.alpha[{i, j}] = 1;
  return p;
}

Polytope minkowski_associahedron(const MinkowskiParams& params) {
  const int n = params.n;
  if (n < 1) throw std::invalid_argument("minkowski parameters: need n >= 1");
  std::vector<std::pair<int, int>> intervals;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) intervals.emplace_back(i, j);
  if (params.alpha.size() != intervals.size())
    throw std::invalid_argument("minkowski parameters: expected one weight per interval");
  for (const auto& iv : intervals) {
    const auto it = params.alpha.find(iv);
    if (it == params.alpha.end() || it->second <= 0) {
      std::ostringstream why;
      why << "minkowski parameters: weight for [" << iv.first << ".." << iv.second
          << "] missing or not positive";
      throw std::invalid_argument(why.str());
    }
  }

  // Iterated pairwise sums: after each simplex the accumulated point set is
  // reduced to its hull's vertices, keeping intermediate sizes small.
  const int na = n + 1;
  std::vector<RationalVector> pts = {RationalVector::Zero(na)};
  Polytope hull;
  for (const auto& [i, j] : intervals) {
    const Rational w = params.alpha.at({i, j});
    std::vector<RationalVector> expanded;
    expanded.reserve(pts.size() * (j - i + 1));
    for (const RationalVector& p : pts)
      for (int t = i; t <= j; ++t) {
        RationalVector q = p;
        q[t - 1] += w;
        expanded.push_back(std::move(q));
      }
    hull = convex_hull(expanded);
    pts = hull.vertices;
  }
  return hull;
}

}  // namespace assoc
