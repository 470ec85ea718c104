#include "assoc/multi.hpp"

#include "assoc/errors.hpp"
#include "assoc/rational.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <functional>
#include <limits>
#include <stdexcept>

namespace assoc {
namespace {

constexpr int kMaxSegments = 128;
using SegSet = std::bitset<kMaxSegments>;

void check_params(int n, int k) {
  if (k < 1) throw std::invalid_argument("multiassociahedron: need k >= 1");
  if (n < 2 * k + 1) throw std::invalid_argument("multiassociahedron: need n >= 2k+1");
}

// Crossing adjacency over an explicit segment universe.
struct CrossingGraph {
  std::vector<KDiagonal> segments;
  std::vector<SegSet> crossing;  // crossing[i] = segments crossing segments[i]

  explicit CrossingGraph(std::vector<KDiagonal> segs) : segments(std::move(segs)) {
    const int n = static_cast<int>(segments.size());
    if (n > kMaxSegments)
      throw resource_limit_error("multiassociahedron: segment universe too large");
    crossing.resize(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (segments_cross(segments[i], segments[j])) {
          crossing[i].set(j);
          crossing[j].set(i);
        }
  }

  int size() const { return static_cast<int>(segments.size()); }

  // Is there a clique of `want` pairwise-crossing segments inside cand?
  bool has_clique(const SegSet& cand, int want, int from = 0) const {
    if (want == 0) return true;
    for (int v = from; v < size(); ++v)
      if (cand.test(v) && has_clique(cand & crossing[v], want - 1, v + 1)) return true;
    return false;
  }

  // Can seg v be added to the (k+1)-crossing-free set s without creating a
  // (k+1)-crossing?  (s must already be crossing-free.)
  bool addable(const SegSet& s, int v, int k) const {
    return !has_clique(s & crossing[v], k);
  }
};

std::vector<KDiagonal> all_segments(int n) {
  std::vector<KDiagonal> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  return out;
}

}  // namespace

bool segments_cross(const KDiagonal& d, const KDiagonal& e) {
  if (d.a == e.a || d.a == e.b || d.b == e.a || d.b == e.b) return false;
  const bool inside_a = d.a < e.a && e.a < d.b;
  const bool inside_b = d.a < e.b && e.b < d.b;
  return inside_a != inside_b;
}

std::vector<KDiagonal> relevant_diagonals(int n, int k) {
  check_params(n, k);
  std::vector<KDiagonal> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const int side = b - a - 1, other = n - 2 - side;
      if (side >= k && other >= k) out.push_back({a, b});
    }
  return out;
}

bool is_k1_crossing_free(const std::vector<KDiagonal>& s, int n, int k) {
  check_params(n, k);
  for (const KDiagonal& d : s)
    if (!(1 <= d.a && d.a < d.b && d.b <= n))
      throw std::invalid_argument("is_k1_crossing_free: segment out of range");
  CrossingGraph g(s);
  SegSet all;
  for (int i = 0; i < g.size(); ++i) all.set(i);
  return !g.has_clique(all, k + 1);
}

std::vector<KTriangulation> enumerate_k_triangulations(int n, int k) {
  check_params(n, k);
  const CrossingGraph g(relevant_diagonals(n, k));
  const int nseg = g.size();

  std::vector<KTriangulation> out;
  std::vector<int> chosen;
  SegSet chosen_set;

  // Every (k+1)-crossing-free set is visited once (indices increasing);
  // the maximal ones are the facets.
  const std::function<void(int)> rec = [&](int start) {
    bool maximal = true;
    for (int v = 0; v < nseg && maximal; ++v)
      if (!chosen_set.test(v) && g.addable(chosen_set, v, k)) maximal = false;
    if (maximal) {
      KTriangulation t;
      for (int c : chosen) t.push_back(g.segments[c]);
      out.push_back(std::move(t));
    }
    for (int v = start; v < nseg; ++v) {
      if (!g.addable(chosen_set, v, k)) continue;
      chosen.push_back(v);
      chosen_set.set(v);
      rec(v + 1);
      chosen.pop_back();
      chosen_set.reset(v);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

FVector f_vector(int n, int k) {
  check_params(n, k);
  if (n < 2 * k + 2)
    throw std::invalid_argument("f_vector: need n >= 2k+2 (n = 2k+1 is the empty complex)");
  const CrossingGraph g(relevant_diagonals(n, k));
  const int nseg = g.size();
  std::vector<long long> counts;  // counts[c-1] = number of faces of cardinality c
  SegSet chosen_set;
  const std::function<void(int, int)> rec = [&](int start, int size) {
    if (size > 0) {
      if (static_cast<int>(counts.size()) < size) counts.resize(size, 0);
      ++counts[size - 1];
    }
    for (int v = start; v < nseg; ++v) {
      if (!g.addable(chosen_set, v, k)) continue;
      chosen_set.set(v);
      rec(v + 1, size + 1);
      chosen_set.reset(v);
    }
  };
  rec(0, 0);
  return FVector{std::move(counts)};
}

std::pair<bool, int> purity_and_dimension_check(int n, int k) {
  const std::vector<KTriangulation> facets = enumerate_k_triangulations(n, k);
  std::size_t top = 0;
  for (const KTriangulation& f : facets) top = std::max(top, f.size());
  const std::size_t expected = static_cast<std::size_t>(k) * (n - 2 * k - 1);
  bool pure = top == expected;
  for (const KTriangulation& f : facets)
    if (f.size() != top) pure = false;
  return {pure, static_cast<int>(top) - 1};
}

bool capoyleas_pach_check(int n, int k) {
  check_params(n, k);
  if (n > 12)
    throw resource_limit_error("capoyleas_pach_check: brute force limited to n <= 12");
  const CrossingGraph g(all_segments(n));
  const int nseg = g.size();
  const long long expected = static_cast<long long>(k) * (2 * n - 2 * k - 1);

  long long nodes = 0;
  bool all_match = true;
  long long maximal_count = 0;

  // Include/exclude search over all segments.  A subtree is abandoned when
  // some excluded segment could extend every completion (then no completion
  // is maximal).  All maximal sets are reached: on the path to a maximal
  // set M the pruning test never fires, since a segment addable to
  // chosen+undecided would be addable to M itself.
  SegSet chosen, excluded;
  const std::function<void(int, int)> rec = [&](int next, int size) {
    if (++nodes > 40'000'000)
      throw resource_limit_error("capoyleas_pach_check: node budget exceeded");
    if (!all_match) return;
    if (next == nseg) {
      for (int x = 0; x < nseg; ++x)
        if (excluded.test(x) && g.addable(chosen, x, k)) return;  // not maximal
      ++maximal_count;
      if (size != expected) all_match = false;
      return;
    }
    // Every completion S' here satisfies chosen <= S' <= chosen+undecided
    // and is crossing-free, so an excluded x is addable to S' unless some
    // k-clique of crossings through x lies inside S'.  If not even
    // chosen+undecided contains such a clique, x is addable to every
    // completion and none can be maximal.
    SegSet undecided;
    for (int v = next; v < nseg; ++v) undecided.set(v);
    const SegSet closure = chosen | undecided;
    for (int x = 0; x < nseg; ++x)
      if (excluded.test(x) && !g.has_clique(closure & g.crossing[x], k)) return;
    if (g.addable(chosen, next, k)) {
      chosen.set(next);
      rec(next + 1, size + 1);
      chosen.reset(next);
    }
    excluded.set(next);
    rec(next + 1, size);
    excluded.reset(next);
  };
  rec(0, 0);
  if (maximal_count == 0) return false;
  return all_match;
}

FlipGraph flip_graph_connected(int n, int k, std::size_t max_facets) {
  const std::vector<KTriangulation> facets = enumerate_k_triangulations(n, k);
  const int nf = static_cast<int>(facets.size());
  if (facets.size() > max_facets)
    throw resource_limit_error("flip_graph_connected: facet count exceeds the cap");

  FlipGraph fg;
  fg.adjacency.resize(nf);
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) {
      if (facets[i].size() != facets[j].size()) continue;
      std::vector<KDiagonal> shared;
      std::set_intersection(facets[i].begin(), facets[i].end(), facets[j].begin(),
                            facets[j].end(), std::back_inserter(shared));
      if (shared.size() + 1 == facets[i].size()) {
        fg.adjacency[i].push_back(j);
        fg.adjacency[j].push_back(i);
      }
    }

  std::vector<char> seen(nf, 0);
  std::vector<int> stack = {0};
  if (nf > 0) seen[0] = 1;
  int reached = nf > 0 ? 1 : 0;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    for (int nb : fg.adjacency[cur])
      if (!seen[nb]) {
        seen[nb] = 1;
        ++reached;
        stack.push_back(nb);
      }
  }
  fg.connected = reached == nf;
  return fg;
}

long long jonsson_count(int n, int k) {
  check_params(n, k);
  const auto cat = [](int r) -> Integer {
    if (r < 0) return 0;
    std::vector<Integer> c(r + 1, Integer(0));
    c[0] = 1;
    for (int t = 1; t <= r; ++t)
      for (int i = 0; i < t; ++i) c[t] += c[i] * c[t - 1 - i];
    return c[r];
  };
  // Exact determinant by Laplace expansion (k is tiny).
  std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = cat(n - i - j);
  std::vector<int> cols(k);
  for (int j = 0; j < k; ++j) cols[j] = j;
  const std::function<Integer(int, std::vector<int>&)> det = [&](int row,
                                                                 std::vector<int>& cs) {
    if (cs.empty()) return Integer(1);
    Integer acc = 0;
    for (std::size_t t = 0; t < cs.size(); ++t) {
      const int c = cs[t];
      std::vector<int> rest;
      for (std::size_t u = 0; u < cs.size(); ++u)
        if (u != t) rest.push_back(cs[u]);
      const Integer sub = det(row + 1, rest);
      const Integer term = m[row][c] * sub;
      if (t % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  };
  const Integer result = det(0, cols);
  if (result < std::numeric_limits<long long>::min() ||
      result > std::numeric_limits<long long>::max())
    throw resource_limit_error("jonsson_count: result exceeds 64 bits");
  return result.convert_to<long long>();
}

FVector cyclic_polytope_boundary_fvector(int k) {
  if (k < 1) throw std::invalid_argument("cyclic_polytope_boundary_fvector: need k >= 1");
  const int m = 2 * k + 3, d = 2 * k;
  if (m > 20) throw resource_limit_error("cyclic polytope: instance too large");

  // Facets of C(m, d) by Gale evenness: d-subsets S such that between any
  // two elements not in S there is an even number of elements of S.
  std::vector<std::uint32_t> facets;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) != d) continue;
    bool ok = true;
    for (int i = 1; i <= m && ok; ++i) {
      if (s & (1u << (i - 1))) continue;
      for (int j = i + 1; j <= m && ok; ++j) {
        if (s & (1u << (j - 1))) continue;
        int between = 0;
        for (int l = i + 1; l < j; ++l)
          if (s & (1u << (l - 1))) ++between;
        if (between % 2) ok = false;
      }
    }
    if (ok) facets.push_back(s);
  }

  // The polytope is simplicial, so its proper faces are exactly the
  // nonempty subsets of facet vertex sets.
  std::vector<char> is_face(1u << m, 0);
  for (const std::uint32_t f : facets) {
    // Enumerate submasks.
    for (std::uint32_t sub = f;; sub = (sub - 1) & f) {
      is_face[sub] = 1;
      if (sub == 0) break;
    }
  }
  FVector fv;
  fv.counts.assign(d, 0);
  for (std::uint32_t s = 1; s < (1u << m); ++s)
    if (is_face[s]) ++fv.counts[std::popcount(s) - 1];
  return fv;
}

}  // namespace assoc
