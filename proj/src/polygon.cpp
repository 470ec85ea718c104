#include "assoc/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {
namespace {

void check_diagonal(const Diagonal& d, int m) {
  if (d.a < 1 || d.b > m || d.a >= d.b)
    throw std::invalid_argument("diagonal endpoints out of range");
  if (is_polygon_edge(d.a, d.b, m))
    throw std::invalid_argument("polygon edge is not a diagonal");
}

// Triangulations of the fan polygon with boundary labels lo..hi (consecutive
// integers), glued along the virtual edge {lo, hi}.
void enumerate_range(int lo, int hi, std::vector<std::vector<std::array<int, 3>>>* out) {
  out->clear();
  if (hi - lo <= 1) {
    out->push_back({});
    return;
  }
  std::vector<std::vector<std::array<int, 3>>> left, right;
  for (int apex = lo + 1; apex < hi; ++apex) {
    enumerate_range(lo, apex, &left);
    enumerate_range(apex, hi, &right);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<std::array<int, 3>> t = l;
        t.insert(t.end(), r.begin(), r.end());
        t.push_back({lo, apex, hi});
        out->push_back(std::move(t));
      }
  }
}

Triangulation from_triangles(std::vector<std::array<int, 3>> triangles, int m) {
  Triangulation t;
  for (auto& tri : triangles) std::sort(tri.begin(), tri.end());
  std::sort(triangles.begin(), triangles.end());
  for (const auto& tri : triangles) {
    const int pairs[3][2] = {{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}};
    for (const auto& pr : pairs)
      if (!is_polygon_edge(pr[0], pr[1], m)) t.diags.push_back({pr[0], pr[1]});
  }
  std::sort(t.diags.begin(), t.diags.end());
  t.diags.erase(std::unique(t.diags.begin(), t.diags.end()), t.diags.end());
  t.triangles = std::move(triangles);
  return t;
}

}  // namespace

bool is_polygon_edge(int a, int b, int m) {
  if (a > b) std::swap(a, b);
  return b - a == 1 || (a == 1 && b == m);
}

std::vector<Diagonal> diagonals(int m) {
  if (m < 4) throw std::invalid_argument("diagonals: need m >= 4");
  std::vector<Diagonal> out;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (!is_polygon_edge(a, b, m)) out.push_back({a, b});
  return out;
}

bool diagonals_cross(const Diagonal& d, const Diagonal& e, int m) {
  check_diagonal(d, m);
  check_diagonal(e, m);
  // With endpoints sorted, {a,b} and {c,e} cross iff one of c,e lies
  // strictly inside the arc (a,b) and the other strictly outside.
  const auto strictly_inside = [&](int x) { return d.a < x && x < d.b; };
  if (d.a == e.a || d.a == e.b || d.b == e.a || d.b == e.b) return false;
  return strictly_inside(e.a) != strictly_inside(e.b);
}

std::vector<Triangulation> enumerate_triangulations(int m) {
  if (m < 3) throw std::invalid_argument("enumerate_triangulations: need m >= 3");
  std::vector<std::vector<std::array<int, 3>>> raw;
  enumerate_range(1, m, &raw);
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& triangles : raw) out.push_back(from_triangles(std::move(triangles), m));
  std::sort(out.begin(), out.end(),
            [](const Triangulation& x, const Triangulation& y) { return x.diags < y.diags; });
  return out;
}

Triangulation flip_diagonal(const Triangulation& t, const Diagonal& d) {
  if (!std::binary_search(t.diags.begin(), t.diags.end(), d))
    throw std::invalid_argument("flip_diagonal: diagonal not in triangulation");
  // The two triangles sharing d form a quadrilateral; the flip replaces d
  // by the quadrilateral's other diagonal.
  std::vector<std::array<int, 3>> adj, rest;
  for (const auto& tri : t.triangles) {
    const bool has_a = tri[0] == d.a || tri[1] == d.a || tri[2] == d.a;
    const bool has_b = tri[0] == d.b || tri[1] == d.b || tri[2] == d.b;
    if (has_a && has_b)
      adj.push_back(tri);
    else
      rest.push_back(tri);
  }
  if (adj.size() != 2) throw std::invalid_argument("flip_diagonal: malformed triangulation");
  int apexes[2];
  for (int i = 0; i < 2; ++i)
    for (int v : adj[i])
      if (v != d.a && v != d.b) apexes[i] = v;
  std::array<int, 3> n1 = {apexes[0], apexes[1], d.a};
  std::array<int, 3> n2 = {apexes[0], apexes[1], d.b};
  std::sort(n1.begin(), n1.end());
  std::sort(n2.begin(), n2.end());
  rest.push_back(n1);
  rest.push_back(n2);

  // Reconstruct the diagonal list from scratch; m is recovered from labels.
  int m = 0;
  for (const auto& tri : rest) m = std::max({m, tri[0], tri[1], tri[2]});
  return from_triangles(std::move(rest), m);
}

AbstractAssociahedron abstract_associahedron(int m) {
  AbstractAssociahedron a;
  a.m = m;
  a.vertex_labels = enumerate_triangulations(m);
  a.facet_labels = diagonals(m);
  a.incidence.resize(a.facet_labels.size());
  for (std::size_t di = 0; di < a.facet_labels.size(); ++di)
    for (std::size_t ti = 0; ti < a.vertex_labels.size(); ++ti)
      if (std::binary_search(a.vertex_labels[ti].diags.begin(),
                             a.vertex_labels[ti].diags.end(), a.facet_labels[di]))
        a.incidence[di].push_back(static_cast<int>(ti));
  return a;
}

long long catalan(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("catalan: n out of supported range");
  // C_0 = 1, C_{k+1} = sum_i C_i C_{k-i}; n <= 30 stays within 64 bits.
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

}  // namespace assoc
