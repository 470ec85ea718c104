#pragma once

// Combinatorics of the convex m-gon with vertices labelled 1..m in cyclic
// order: diagonals, crossings, triangulations, diagonal flips, and the
// abstract associahedron they form.  Everything here is label arithmetic;
// no coordinates are involved.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace assoc {

/// A diagonal {a, b} of the m-gon, stored with a < b.  Validity (being
/// non-adjacent in the m-cycle) is enforced by the functions that take m.
struct Diagonal {
  int a = 0;
  int b = 0;
  auto operator<=>(const Diagonal&) const = default;
};

/// True iff {a, b} with a < b is an edge of the m-gon boundary.
bool is_polygon_edge(int a, int b, int m);

/// All diagonals of the m-gon in lexicographic order.  Requires m >= 3.
std::vector<Diagonal> diagonals(int m);

/// True iff the two diagonals cross in the open interior, i.e. their
/// endpoint labels strictly interleave around the cycle.  Both diagonals
/// must be valid for the m-gon.
bool diagonals_cross(const Diagonal& d, const Diagonal& e, int m);

/// A triangulation of the m-gon: its triangles (vertex triples, each
/// sorted; list sorted) and its m-3 pairwise noncrossing diagonals.
struct Triangulation {
  std::vector<std::array<int, 3>> triangles;
  std::vector<Diagonal> diags;
  bool operator==(const Triangulation&) const = default;
};

/// All triangulations of the m-gon, Catalan(m-2) of them, in a fixed
/// deterministic order.  Requires m >= 3.
std::vector<Triangulation> enumerate_triangulations(int m);

/// Flip one diagonal: remove d (which must belong to t), replace the two
/// triangles adjacent to it by the other diagonal of their union.  Throws
/// std::invalid_argument if d is not a diagonal of t.
Triangulation flip_diagonal(const Triangulation& t, const Diagonal& d);

/// The vertex/facet incidence structure shared by every geometric
/// associahedron: vertices = triangulations of the m-gon, facets =
/// diagonals, and a vertex lies on a facet iff the triangulation uses the
/// diagonal.  A candidate polytope is an associahedron realisation exactly
/// when its own incidence structure matches this one.
struct AbstractAssociahedron {
  int m = 0;
  std::vector<Triangulation> vertex_labels;
  std::vector<Diagonal> facet_labels;
  // incidence[i] = sorted indices of the triangulations using
  // facet_labels[i] (their vertices lie on that facet).
  std::vector<std::vector<int>> incidence;
};

AbstractAssociahedron abstract_associahedron(int m);

/// Catalan number C_n; exact for n <= 30 (fits in 64 bits).
long long catalan(int n);

}  // namespace assoc
