#include "assoc/errors.hpp"
#include "assoc/multi.hpp"
#include "assoc/polygon.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace assoc;

namespace {

// Face counts of the crossing-free-subsets complex of the n-gon, derived
// straight from polygon-combinatorics — an oracle for f_vector(n, 1).
std::vector<long long> noncrossing_subset_counts(int n) {
  const auto ds = diagonals(n);
  std::vector<long long> counts;  // counts[j] = sets of size j+1
  std::vector<int> chosen;
  const auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) {
      if (counts.size() < chosen.size()) counts.resize(chosen.size(), 0);
      ++counts[chosen.size() - 1];
    }
    for (std::size_t i = from; i < ds.size(); ++i) {
      bool ok = true;
      for (int c : chosen) ok = ok && !diagonals_cross(ds[c], ds[i], n);
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return counts;
}

KTriangulation relabel(const KTriangulation& t, int n, bool reflect) {
  KTriangulation out;
  for (const KDiagonal& d : t) {
    int a = reflect ? n + 1 - d.a : d.a % n + 1;
    int b = reflect ? n + 1 - d.b : d.b % n + 1;
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("relevant diagonals") {
  CHECK(relevant_diagonals(6, 2) ==
        std::vector<KDiagonal>{{1, 4}, {2, 5}, {3, 6}});
  CHECK(relevant_diagonals(5, 2).empty());
  CHECK(relevant_diagonals(6, 1).size() == 9);
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k + 1; n <= 12; ++n)
      CHECK(static_cast<int>(relevant_diagonals(n, k).size()) ==
            n * (n - 2 * k - 1) / 2);
  CHECK_THROWS_AS(relevant_diagonals(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(relevant_diagonals(6, 0), std::invalid_argument);
}

TEST_CASE("crossing-freeness predicate") {
  CHECK(is_k1_crossing_free({{1, 4}, {2, 5}}, 6, 2));
  CHECK(!is_k1_crossing_free({{1, 4}, {2, 5}, {3, 6}}, 6, 2));
  CHECK(is_k1_crossing_free({}, 6, 2));
  CHECK(!is_k1_crossing_free({{1, 4}, {2, 5}}, 6, 1));
  // Sharing an endpoint never counts as crossing.
  CHECK(is_k1_crossing_free({{1, 4}, {4, 6}, {1, 3}}, 6, 1));
}

TEST_CASE("facets of the multiassociahedron") {
  SUBCASE("the guiding hexagon example") {
    const auto facets = enumerate_k_triangulations(6, 2);
    const std::vector<KTriangulation> expect = {
        {{1, 4}, {2, 5}}, {{1, 4}, {3, 6}}, {{2, 5}, {3, 6}}};
    CHECK(facets == expect);
  }
  SUBCASE("n=2k+1 has the empty facet only") {
    for (int k : {1, 2, 3}) {
      const auto facets = enumerate_k_triangulations(2 * k + 1, k);
      REQUIRE(facets.size() == 1);
      CHECK(facets[0].empty());
    }
  }
  SUBCASE("n=2k+2 is the boundary of a k-simplex") {
    for (int k : {1, 2, 3, 4}) {
      const auto facets = enumerate_k_triangulations(2 * k + 2, k);
      CHECK(facets.size() == static_cast<std::size_t>(k + 1));
      for (const auto& f : facets) CHECK(f.size() == static_cast<std::size_t>(k));
    }
  }
  SUBCASE("the 594-facet instance") {
    CHECK(enumerate_k_triangulations(9, 2).size() == 594);
  }
  SUBCASE("no crossing-free relevant set exceeds the facet size (n <= 9)") {
    for (int k = 1; k <= 3; ++k)
      for (int n = 2 * k + 2; n <= 9; ++n) {
        const auto rel = relevant_diagonals(n, k);
        const std::size_t facet_size = static_cast<std::size_t>(k * (n - 2 * k - 1));
        // Greedy DFS for any crossing-free set one larger than a facet.
        std::vector<KDiagonal> chosen;
        bool found_bigger = false;
        const auto rec = [&](auto&& self, std::size_t from) -> void {
          if (found_bigger) return;
          if (chosen.size() > facet_size) {
            found_bigger = true;
            return;
          }
          for (std::size_t i = from; i < rel.size(); ++i) {
            chosen.push_back(rel[i]);
            if (is_k1_crossing_free(chosen, n, k)) self(self, i + 1);
            chosen.pop_back();
            if (found_bigger) return;
          }
        };
        rec(rec, 0);
        CHECK(!found_bigger);
      }
  }
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(9, 2) ==
        FVector{{18, 153, 732, 2115, 3762, 4026, 2376, 594}});
  CHECK(f_vector(6, 2) == FVector{{3, 3}});
  CHECK(f_vector(6, 1) == FVector{{9, 21, 14}});
  SUBCASE("k=1 matches the crossing-free subset counts from the polygon module") {
    for (int n = 5; n <= 8; ++n) {
      const FVector f = f_vector(n, 1);
      const auto oracle = noncrossing_subset_counts(n);
      REQUIRE(f.counts.size() == oracle.size());
      for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(f.counts[i] == oracle[i]);
    }
  }
  SUBCASE("top entry is the facet count and f_0 the diagonal count") {
    for (int k = 1; k <= 3; ++k)
      for (int n = 2 * k + 2; n <= 9; ++n) {
        const FVector f = f_vector(n, k);
        CHECK(f.counts.front() ==
              static_cast<long long>(relevant_diagonals(n, k).size()));
        CHECK(f.counts.back() ==
              static_cast<long long>(enumerate_k_triangulations(n, k).size()));
        CHECK(f.counts.size() == static_cast<std::size_t>(k * (n - 2 * k - 1)));
      }
  }
  SUBCASE("n=2k+1 is rejected (the complex is a point)") {
    CHECK_THROWS_AS(f_vector(5, 2), std::invalid_argument);
  }
}

TEST_CASE("purity and dimension") {
  CHECK(purity_and_dimension_check(9, 2) == std::pair{true, 7});
  CHECK(purity_and_dimension_check(6, 2) == std::pair{true, 1});
  CHECK(purity_and_dimension_check(7, 3) == std::pair{true, -1});
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k + 2; n <= 10; ++n) {
      const auto [pure, dim] = purity_and_dimension_check(n, k);
      CHECK(pure);
      CHECK(dim == k * (n - 2 * k - 1) - 1);
    }
}

TEST_CASE("every face extends to a facet") {
  // Constructive pureness: faces of Delta_{7,2} are crossing-free relevant
  // sets; each must be a subset of some enumerated facet.
  const int n = 7, k = 2;
  const auto rel = relevant_diagonals(n, k);
  const auto facets = enumerate_k_triangulations(n, k);
  std::vector<std::set<KDiagonal>> facet_sets;
  for (const auto& f : facets) facet_sets.emplace_back(f.begin(), f.end());
  std::vector<KDiagonal> chosen;
  int faces_checked = 0;
  const auto rec = [&](auto&& self, std::size_t from) -> void {
    const bool contained = std::any_of(
        facet_sets.begin(), facet_sets.end(), [&](const std::set<KDiagonal>& fs) {
          return std::all_of(chosen.begin(), chosen.end(),
                             [&](const KDiagonal& d) { return fs.count(d); });
        });
    CHECK(contained);
    ++faces_checked;
    for (std::size_t i = from; i < rel.size(); ++i) {
      chosen.push_back(rel[i]);
      if (is_k1_crossing_free(chosen, n, k)) self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  CHECK(faces_checked > 20);
}

TEST_CASE("capoyleas-pach sizes over all segments") {
  CHECK(capoyleas_pach_check(5, 2));
  CHECK(capoyleas_pach_check(6, 2));
  CHECK(capoyleas_pach_check(7, 2));
  CHECK(capoyleas_pach_check(6, 1));
  CHECK(capoyleas_pach_check(7, 3));
  CHECK_THROWS_AS(capoyleas_pach_check(13, 2), resource_limit_error);
}

TEST_CASE("flip graph") {
  SUBCASE("hexagon, k=2: a triangle") {
    const FlipGraph g = flip_graph_connected(6, 2);
    CHECK(g.connected);
    REQUIRE(g.adjacency.size() == 3);
    for (const auto& nbrs : g.adjacency) CHECK(nbrs.size() == 2);
  }
  SUBCASE("hexagon, k=1 matches the polygon flip graph") {
    const FlipGraph g = flip_graph_connected(6, 1);
    CHECK(g.connected);
    CHECK(g.adjacency.size() == 14);
    std::size_t edges = 0;
    for (const auto& nbrs : g.adjacency) {
      CHECK(nbrs.size() == 3);
      edges += nbrs.size();
    }
    CHECK(edges / 2 == 21);
  }
  SUBCASE("all desk-scale cases are connected with per-diagonal neighbors") {
    for (int k = 1; k <= 3; ++k)
      for (int n = 2 * k + 2; n <= 10; ++n) {
        if (jonsson_count(n, k) > 1000) continue;
        const FlipGraph g = flip_graph_connected(n, k);
        CHECK(g.connected);
        // These complexes are ridge-regular: every facet has one neighbor
        // across each of its k(n-2k-1) ridges.
        if (g.adjacency.size() > 1)
          for (const auto& nbrs : g.adjacency)
            CHECK(nbrs.size() == static_cast<std::size_t>(k * (n - 2 * k - 1)));
      }
  }
  SUBCASE("the facet cap is enforced") {
    CHECK_THROWS_AS(flip_graph_connected(12, 2, 100), resource_limit_error);
  }
}

TEST_CASE("jonsson determinant") {
  CHECK(jonsson_count(6, 2) == 3);
  CHECK(jonsson_count(9, 2) == 594);
  CHECK(jonsson_count(6, 1) == 14);
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k + 1; n <= 10; ++n)
      CHECK(jonsson_count(n, k) ==
            static_cast<long long>(enumerate_k_triangulations(n, k).size()));
}

TEST_CASE("cyclic polytope comparison") {
  CHECK(cyclic_polytope_boundary_fvector(1) == FVector{{5, 5}});
  for (int k : {1, 2, 3})
    CHECK(f_vector(2 * k + 3, k) == cyclic_polytope_boundary_fvector(k));
}

TEST_CASE("face counts are invariant under relabeling symmetries") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 2}, {8, 2}, {8, 3}, {7, 1}}) {
    const auto facets = enumerate_k_triangulations(n, k);
    std::set<KTriangulation> base(facets.begin(), facets.end());
    std::set<KTriangulation> rotated, reflected;
    for (const auto& f : facets) {
      rotated.insert(relabel(f, n, false));
      reflected.insert(relabel(f, n, true));
    }
    CHECK(rotated == base);
    CHECK(reflected == base);
  }
}
