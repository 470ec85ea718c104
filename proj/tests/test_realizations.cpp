#include "assoc/errors.hpp"
#include "assoc/pointconfig.hpp"
#include "assoc/polygon.hpp"
#include "assoc/realizations.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

using namespace assoc;

namespace {

RationalVector rv(std::vector<long> entries) {
  RationalVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v[static_cast<Eigen::Index>(i)] = entries[i];
  return v;
}

bool same_polytope(const Polytope& a, const Polytope& b) {
  if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) return false;
  for (int i = 0; i < a.vertex_count(); ++i)
    if (!vec_eq(a.vertices[i], b.vertices[i])) return false;
  for (int i = 0; i < a.facet_count(); ++i) {
    if (!vec_eq(a.facets[i].normal, b.facets[i].normal)) return false;
    if (a.facets[i].offset != b.facets[i].offset) return false;
    if (a.facets[i].vertex_indices != b.facets[i].vertex_indices) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parabola configurations") {
  const PointConfig2D q = parabola_config(4, 0, 1);
  REQUIRE(q.size() == 4);
  CHECK(vec_eq(q.at(1), rv({0, 0})));
  CHECK(vec_eq(q.at(2), rv({1, 1})));
  CHECK(vec_eq(q.at(3), rv({2, 4})));
  CHECK(vec_eq(q.at(4), rv({3, 9})));

  SUBCASE("rotation by 90 degrees keeps a valid strictly convex config") {
    AffineMap2D rot{RationalMatrix(2, 2), RationalVector::Zero(2)};
    rot.linear << 0, -1, 1, 0;
    const PointConfig2D r = parabola_config(4, 0, 1, rot);
    REQUIRE(r.size() == 4);
    // The rotated points, relabeled counterclockwise starting at the
    // lexicographic minimum of the boundary cycle.
    std::set<std::string> expect = {"0 0", "-1 1", "-4 2", "-9 3"};
    std::set<std::string> got;
    for (int i = 1; i <= 4; ++i) got.insert(to_string(r.at(i)));
    CHECK(got == expect);
    CHECK(corner_labels(r).size() == 4);
  }
  SUBCASE("negative step traverses the parabola the other way") {
    const PointConfig2D r = parabola_config(5, Rational(-5), Rational(2));
    CHECK(r.size() == 5);
    CHECK(corner_labels(r).size() == 5);
    const PointConfig2D neg = parabola_config(5, Rational(1, 2), Rational(-1, 3));
    CHECK(neg.size() == 5);
    CHECK(corner_labels(neg).size() == 5);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_WITH_AS(parabola_config(4, 0, 0),
                         doctest::Contains("coincident points"), std::invalid_argument);
    AffineMap2D sing{RationalMatrix(2, 2), RationalVector::Zero(2)};
    sing.linear << 1, 2, 2, 4;
    CHECK_THROWS_WITH_AS(parabola_config(4, 0, 1, sing), doctest::Contains("singular"),
                         std::invalid_argument);
  }
}

TEST_CASE("gkz vectors of the parabola 4-gon") {
  const PointConfig2D q = parabola_config(4, 0, 1);
  const ConfigTriangulation t13{{{1, 2, 3}, {1, 3, 4}}, {1, 2, 3, 4}};
  const ConfigTriangulation t24{{{1, 2, 4}, {2, 3, 4}}, {1, 2, 3, 4}};
  CHECK(vec_eq(gkz_vector(q, t13), rv({12, 8, 7, 3})));
  CHECK(vec_eq(gkz_vector(q, t24), rv({12, 9, 5, 4})));
}

TEST_CASE("gkz vector of a single triangle") {
  const PointConfig2D q = make_point_config({rv({0, 0}), rv({1, 0}), rv({0, 1})});
  const ConfigTriangulation t{{{1, 2, 3}}, {1, 2, 3}};
  CHECK(to_string(gkz_vector(q, t)) == "3/2 1 1/2");
}

TEST_CASE("gkz rejects invalid triangulations") {
  const PointConfig2D q = parabola_config(4, 0, 1);
  // Overlapping triangles.
  CHECK_THROWS_WITH_AS(gkz_vector(q, {{{1, 2, 3}, {1, 2, 4}}, {1, 2, 3, 4}}),
                       doctest::Contains("invalid triangulation"), std::invalid_argument);
  // Incomplete cover.
  CHECK_THROWS_WITH_AS(gkz_vector(q, {{{1, 2, 3}}, {1, 2, 3}}),
                       doctest::Contains("invalid triangulation"), std::invalid_argument);
  // Degenerate triangle (collinear points on the parabola never are, so use
  // a repeated label).
  CHECK_THROWS_WITH_AS(gkz_vector(q, {{{1, 2, 2}, {1, 3, 4}}, {1, 2, 3, 4}}),
                       doctest::Contains("invalid triangulation"), std::invalid_argument);
  // Label out of range.
  CHECK_THROWS_WITH_AS(gkz_vector(q, {{{1, 2, 5}, {1, 3, 4}}, {1, 2, 3, 4}}),
                       doctest::Contains("invalid triangulation"), std::invalid_argument);
}

TEST_CASE("secondary polytope of the parabola 4-gon is the expected segment") {
  const Polytope p = secondary_polytope(parabola_config(4, 0, 1));
  CHECK(p.ambient_dim == 4);
  CHECK(p.intrinsic_dim == 1);
  REQUIRE(p.vertex_count() == 2);
  CHECK(vec_eq(p.vertices[0], rv({12, 8, 7, 3})));
  CHECK(vec_eq(p.vertices[1], rv({12, 9, 5, 4})));
}

TEST_CASE("secondary polytopes of strictly convex polygons") {
  SUBCASE("pentagon") {
    const Polytope p = secondary_polytope(random_convex_polygon(5, 11));
    CHECK(p.intrinsic_dim == 2);
    CHECK(p.vertex_count() == 5);
    CHECK(p.facet_count() == 5);
    CHECK(affine_dimension(p.vertices) == 2);
  }
  SUBCASE("hexagon, including the facet-diagonal dictionary") {
    const PointConfig2D q = random_convex_polygon(6, 23);
    const Polytope p = secondary_polytope(q);
    CHECK(p.intrinsic_dim == 3);
    CHECK(p.vertex_count() == 14);
    CHECK(p.facet_count() == 9);

    // Every GKZ vector is a vertex: none lands in the interior.
    const auto ts = enumerate_config_triangulations(q);
    REQUIRE(ts.size() == 14);
    std::set<std::string> vertex_set;
    for (const auto& v : p.vertices) vertex_set.insert(to_string(v));
    for (const auto& t : ts) CHECK(vertex_set.count(to_string(gkz_vector(q, t))));

    // For each diagonal d, the triangulations containing d give exactly the
    // vertex set of one facet.
    std::set<std::set<std::string>> facet_vertex_sets;
    for (const Facet& f : p.facets) {
      std::set<std::string> s;
      for (int v : f.vertex_indices) s.insert(to_string(p.vertices[v]));
      facet_vertex_sets.insert(s);
    }
    int matched = 0;
    for (const Diagonal& d : diagonals(6)) {
      std::set<std::string> s;
      for (const auto& t : ts) {
        bool uses = false;
        for (const auto& tri : t.triangles)
          for (int u = 0; u < 3 && !uses; ++u)
            for (int w = u + 1; w < 3; ++w)
              if (Diagonal{tri[u], tri[w]} == d) uses = true;
        if (uses) s.insert(to_string(gkz_vector(q, t)));
      }
      matched += facet_vertex_sets.count(s);
    }
    CHECK(matched == 9);
  }
  SUBCASE("multithreaded construction is identical") {
    const PointConfig2D q = random_convex_polygon(7, 5);
    CHECK(same_polytope(secondary_polytope(q, 1), secondary_polytope(q, 4)));
  }
  SUBCASE("too few points") {
    CHECK_THROWS_WITH_AS(secondary_polytope(make_point_config({rv({0, 0}), rv({1, 0}),
                                                               rv({0, 1})})),
                         doctest::Contains("dimension < 1"), std::invalid_argument);
  }
}

TEST_CASE("config triangulations") {
  SUBCASE("strictly convex configs reduce to polygon triangulations") {
    for (int m : {5, 6}) {
      const PointConfig2D q = random_convex_polygon(m, 17 + m);
      const auto config_ts = enumerate_config_triangulations(q);
      const auto poly_ts = enumerate_triangulations(m);
      REQUIRE(config_ts.size() == poly_ts.size());
      std::set<std::vector<std::array<int, 3>>> lhs, rhs;
      for (const auto& t : config_ts) {
        lhs.insert(t.triangles);
        CHECK(t.used_labels.size() == static_cast<std::size_t>(m));
      }
      for (const auto& t : poly_ts) rhs.insert(t.triangles);
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("triangle with three edge midpoints has Catalan(4) triangulations") {
    const PointConfig2D q = make_point_config(
        {rv({0, 0}), rv({1, 0}), rv({2, 0}), rv({1, 1}), rv({0, 2}), rv({0, 1})});
    CHECK(enumerate_config_triangulations(q).size() == 14);
  }
  SUBCASE("square with one edge midpoint has Catalan(3) triangulations") {
    const PointConfig2D q = make_point_config(
        {rv({0, 0}), rv({1, 0}), rv({2, 0}), rv({2, 2}), rv({0, 2})});
    const auto ts = enumerate_config_triangulations(q);
    CHECK(ts.size() == 5);
    // The midpoint (1,0) is unused exactly when no chosen triangle touches it.
    int unused_cases = 0;
    for (const auto& t : ts)
      unused_cases +=
          !std::count(t.used_labels.begin(), t.used_labels.end(), 2);
    CHECK(unused_cases > 0);
  }
}

TEST_CASE("point config validation") {
  // Duplicate points.
  CHECK_THROWS_AS(make_point_config({rv({0, 0}), rv({0, 0}), rv({1, 0})}),
                  std::invalid_argument);
  // Interior point (not on the hull boundary).
  CHECK_THROWS_AS(
      make_point_config({rv({0, 0}), rv({3, 0}), rv({0, 3}), rv({1, 1})}),
      std::invalid_argument);
  // Two points inside one hull edge.
  CHECK_THROWS_AS(make_point_config({rv({0, 0}), rv({1, 0}), rv({2, 0}), rv({3, 0}),
                                     rv({0, 3})}),
                  std::invalid_argument);
  // Points not listed in boundary order.
  CHECK_THROWS_AS(make_point_config({rv({0, 0}), rv({1, 1}), rv({1, 0}), rv({0, 1})}),
                  std::invalid_argument);
  // Clockwise listing is rejected too (labels must run counterclockwise).
  CHECK_THROWS_AS(make_point_config({rv({0, 0}), rv({0, 1}), rv({1, 1}), rv({1, 0})}),
                  std::invalid_argument);
  // A valid weakly convex config reports its corners.
  const PointConfig2D q = make_point_config(
      {rv({0, 0}), rv({1, 0}), rv({2, 0}), rv({1, 1}), rv({0, 2}), rv({0, 1})});
  CHECK(corner_labels(q) == std::vector<int>{1, 3, 5});
  CHECK(hull_area(q) == 2);
}

TEST_CASE("random convex polygons are strictly convex and deterministic") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 42ULL}) {
    for (int m : {5, 6, 7, 8}) {
      const PointConfig2D q = random_convex_polygon(m, seed);
      CHECK(q.size() == m);
      CHECK(corner_labels(q).size() == static_cast<std::size_t>(m));
      const PointConfig2D again = random_convex_polygon(m, seed);
      for (int i = 1; i <= m; ++i) CHECK(vec_eq(q.at(i), again.at(i)));
    }
  }
}

TEST_CASE("cluster realization") {
  SUBCASE("n=2 defaults give a pentagon in the zero-sum plane") {
    const Polytope p = cluster_associahedron(default_cluster_params(2));
    CHECK(p.ambient_dim == 3);
    CHECK(p.intrinsic_dim == 2);
    CHECK(p.vertex_count() == 5);
    CHECK(p.facet_count() == 5);
    for (const auto& v : p.vertices) CHECK(v.sum() == 0);
  }
  SUBCASE("n=3 defaults give the 3-dimensional associahedron counts") {
    const Polytope p = cluster_associahedron(default_cluster_params(3));
    CHECK(p.intrinsic_dim == 3);
    CHECK(p.vertex_count() == 14);
    CHECK(p.facet_count() == 9);
  }
  SUBCASE("n=1 defaults give a segment") {
    const Polytope p = cluster_associahedron(default_cluster_params(1));
    CHECK(p.intrinsic_dim == 1);
    CHECK(p.vertex_count() == 2);
  }
  SUBCASE("defaults are only shipped up to n=5") {
    CHECK_THROWS_AS(default_cluster_params(6), std::invalid_argument);
    CHECK_THROWS_AS(default_cluster_params(0), std::invalid_argument);
  }
  SUBCASE("zero or negative values are rejected") {
    ClusterParams p = default_cluster_params(2);
    p.f[{1, 2}] = 0;
    CHECK_THROWS_AS(cluster_associahedron(p), std::invalid_argument);
    p.f[{1, 2}] = -1;
    CHECK_THROWS_AS(cluster_associahedron(p), std::invalid_argument);
  }
  SUBCASE("missing or foreign pairs are rejected") {
    ClusterParams p = default_cluster_params(2);
    p.f.erase({3, 1});
    CHECK_THROWS_AS(cluster_associahedron(p), std::invalid_argument);
    p.f[{1, 3}] = 1;  // i - j = -2 is outside the index set
    CHECK_THROWS_AS(cluster_associahedron(p), std::invalid_argument);
  }
  SUBCASE("a redundant inequality is reported as unsuitable with its pair") {
    ClusterParams p;
    p.n = 2;
    p.f[{1, 2}] = 1;
    p.f[{2, 1}] = 1;
    p.f[{2, 3}] = 1;
    p.f[{3, 1}] = 100;  // dominated by (3,2)+(2,1)
    p.f[{3, 2}] = 1;
    CHECK_THROWS_WITH_AS(cluster_associahedron(p),
                         doctest::Contains("parameters not suitable"), math_check_error);
    try {
      cluster_associahedron(p);
    } catch (const math_check_error& e) {
      CHECK(std::string(e.what()).find("(3,1)") != std::string::npos);
    }
  }
}

TEST_CASE("minkowski realization") {
  SUBCASE("n=1 is the segment between the two basis vectors") {
    const Polytope p = minkowski_associahedron(default_minkowski_params(1));
    CHECK(p.ambient_dim == 2);
    CHECK(p.intrinsic_dim == 1);
    REQUIRE(p.vertex_count() == 2);
    CHECK(vec_eq(p.vertices[0], rv({0, 1})));
    CHECK(vec_eq(p.vertices[1], rv({1, 0})));
  }
  SUBCASE("n=2 all-ones is a pentagon on a constant-sum plane") {
    const Polytope p = minkowski_associahedron(default_minkowski_params(2));
    CHECK(p.intrinsic_dim == 2);
    CHECK(p.vertex_count() == 5);
    CHECK(p.facet_count() == 5);
    const Rational total = p.vertices[0].sum();
    for (const auto& v : p.vertices) CHECK(v.sum() == total);
  }
  SUBCASE("n=3 all-ones has the associahedron counts") {
    const Polytope p = minkowski_associahedron(default_minkowski_params(3));
    CHECK(p.intrinsic_dim == 3);
    CHECK(p.vertex_count() == 14);
    CHECK(p.facet_count() == 9);
  }
  SUBCASE("agrees with the brute-force sum over vertex tuples") {
    for (int n : {2, 3}) {
      const MinkowskiParams params = default_minkowski_params(n);
      // Every vertex of a Minkowski sum is a sum of vertices of the summands,
      // so hulling all tuple sums is an order-free oracle.
      std::vector<RationalVector> sums = {RationalVector::Zero(n + 1)};
      for (const auto& [interval, weight] : params.alpha) {
        std::vector<RationalVector> next;
        for (int t = interval.first; t <= interval.second; ++t) {
          RationalVector e = RationalVector::Zero(n + 1);
          e[t - 1] = weight;
          for (const auto& s : sums) next.push_back(s + e);
        }
        sums.swap(next);
      }
      CHECK(same_polytope(minkowski_associahedron(params), convex_hull(sums)));
    }
  }
  SUBCASE("scaling all weights scales the polytope") {
    MinkowskiParams params = default_minkowski_params(2);
    const Polytope base = minkowski_associahedron(params);
    for (auto& [interval, weight] : params.alpha) weight = Rational(5, 3);
    const Polytope scaled = minkowski_associahedron(params);
    REQUIRE(base.vertex_count() == scaled.vertex_count());
    for (int i = 0; i < base.vertex_count(); ++i)
      CHECK(vec_eq(RationalVector(base.vertices[i] * Rational(5, 3)), scaled.vertices[i]));
  }
  SUBCASE("weights must be positive and cover every interval") {
    MinkowskiParams params = default_minkowski_params(2);
    params.alpha[{1, 3}] = 0;
    CHECK_THROWS_AS(minkowski_associahedron(params), std::invalid_argument);
    params = default_minkowski_params(2);
    params.alpha.erase({1, 2});
    CHECK_THROWS_AS(minkowski_associahedron(params), std::invalid_argument);
  }
}

TEST_CASE("pentagon GKZ vectors span an affine plane") {
  const PointConfig2D q = random_convex_polygon(5, 77);
  std::vector<RationalVector> gkz;
  for (const auto& t : enumerate_config_triangulations(q)) gkz.push_back(gkz_vector(q, t));
  REQUIRE(gkz.size() == 5);
  CHECK(affine_dimension(gkz) == 2);
}
