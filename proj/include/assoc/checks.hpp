#pragma once

// Checks distinguishing the realizations: is the polytope combinatorially
// an associahedron, are its vertices on a common sphere, how many pairs of
// parallel facets does it have.

#include "assoc/pointconfig.hpp"
#include "assoc/polygon.hpp"
#include "assoc/polytope.hpp"

#include <optional>
#include <utility>

namespace assoc {

struct VerificationReport {
  bool is_associahedron = false;
  int dimension = -1;
  int vertex_count = 0;
  int facet_count = 0;
  bool is_simple = false;
  // facet index -> diagonal of the (n+3)-gon, present iff verified.
  std::optional<std::vector<Diagonal>> incidence_isomorphism;
  std::string failure_reason;  // empty iff is_associahedron
};

/// Checks, in order: intrinsic dimension n, Catalan(n+1) vertices,
/// n(n+3)/2 facets, simplicity, and a vertex/facet incidence isomorphism
/// with the triangulation/diagonal structure of the (n+3)-gon (found by
/// backtracking).  The first failed check is recorded; nothing throws.
VerificationReport verify_associahedron(const Polytope& p, int n);

/// (true, r^2) iff all vertices have the same exact squared norm r^2.
std::pair<bool, std::optional<Rational>> sphericity_check(const Polytope& p);

struct ParallelFacetReport {
  std::vector<std::pair<int, int>> pairs;  // facet index pairs, i < j, sorted
  int count = 0;
};

/// All unordered facet pairs with antiparallel primitive normals.  Normals
/// live in the direction space of the affine hull, so the test is
/// meaningful for lower-dimensional polytopes too.
ParallelFacetReport parallel_facet_pairs(const Polytope& p);

struct WeaklyConvexDemo {
  PointConfig2D config;
  Polytope polytope;
  VerificationReport verification;
  ParallelFacetReport parallel;
};

/// The triangle (0,0),(2,0),(0,2) with all three edge midpoints: a weakly
/// convex 6-point configuration whose secondary polytope is a 3-dimensional
/// associahedron with three pairs of parallel facets.
WeaklyConvexDemo weakly_convex_demo();

}  // namespace assoc
