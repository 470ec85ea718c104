#pragma once

// The simplicial multiassociahedron Delta_{n,k}: vertices are the
// k-relevant diagonals of a convex n-gon, faces are the (k+1)-crossing-free
// subsets, facets ("k-triangulations") the maximal ones.  Everything here
// is exhaustive enumeration at desk scale with explicit guards.

#include <cstddef>
#include <utility>
#include <vector>

namespace assoc {

/// A diagonal {a, b} of the n-gon, a < b, 1-based labels.
struct KDiagonal {
  int a = 0;
  int b = 0;
  auto operator<=>(const KDiagonal&) const = default;
};

/// A maximal (k+1)-crossing-free set of k-relevant diagonals, sorted.
using KTriangulation = std::vector<KDiagonal>;

/// Face counts f_0..f_{d} of a complex, by face cardinality 1..d+1.
struct FVector {
  std::vector<long long> counts;
  bool operator==(const FVector&) const = default;
};

/// True iff the diagonals cross in the open interior (strictly
/// interleaving endpoints; sharing an endpoint does not count).
bool segments_cross(const KDiagonal& d, const KDiagonal& e);

/// All k-relevant diagonals of the n-gon — at least k polygon vertices
/// strictly on each side — in lexicographic order; n(n-2k-1)/2 of them.
/// Requires k >= 1 and n >= 2k+1.
std::vector<KDiagonal> relevant_diagonals(int n, int k);

/// True iff no k+1 elements of s are pairwise crossing.  s may contain any
/// segments of the n-gon (edges and irrelevant diagonals included).
bool is_k1_crossing_free(const std::vector<KDiagonal>& s, int n, int k);

/// All facets of Delta_{n,k} in lexicographic order, found by depth-first
/// extension of crossing-free sets with a final maximality check.
std::vector<KTriangulation> enumerate_k_triangulations(int n, int k);

/// Face counts of Delta_{n,k} by cardinality; f_0 = number of relevant
/// diagonals.  Requires n >= 2k+2 (for n = 2k+1 the complex is a point and
/// has an empty f-vector; this function rejects that case).
FVector f_vector(int n, int k);

/// (every facet has size k(n-2k-1), common facet size - 1).  For
/// n = 2k+1 this is (true, -1).
std::pair<bool, int> purity_and_dimension_check(int n, int k);

/// Brute force over ALL segments of the n-gon (edges included): enumerate
/// every maximal (k+1)-crossing-free segment set and check each has exactly
/// k(2n-2k-1) elements.  Guarded to n <= 12.
bool capoyleas_pach_check(int n, int k);

struct FlipGraph {
  bool connected = false;
  std::vector<std::vector<int>> adjacency;  // per facet: sorted neighbor ids
};

/// Ridge adjacency of the facets (sharing all but one diagonal) and its
/// connectivity.  Guarded by max_facets (the CLI default desk-scale cap).
FlipGraph flip_graph_connected(int n, int k, std::size_t max_facets = 10000);

/// det(C_{n-i-j})_{1<=i,j<=k} with Catalan numbers, C_0 = 1 and C_r = 0
/// for r < 0 — the determinantal count of k-triangulations.
long long jonsson_count(int n, int k);

/// f-vector of the boundary complex of the cyclic polytope C(2k+3, 2k),
/// via the Gale evenness criterion; Delta_{2k+3,k} must match it.
FVector cyclic_polytope_boundary_fvector(int k);

}  // namespace assoc
