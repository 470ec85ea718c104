#pragma once

// Three exact constructions whose output should be an n-dimensional
// associahedron: the secondary polytope of a weakly convex plane
// configuration (n = m-3), a cluster-type H-description, and a weighted
// Minkowski sum of simplices.  Whether a construction *did* produce an
// associahedron is decided separately by the checks module.

#include "assoc/pointconfig.hpp"
#include "assoc/polytope.hpp"

#include <map>
#include <utility>

namespace assoc {

/// The vector in R^m whose coordinate l is  sum over points i >= l of the
/// total area of the triangles of t containing point i  (equivalently,
/// sum_i sum_{triangles at i} area * f_i with f_i = e_1 + ... + e_i).
/// Distinct triangulations of the same configuration give distinct
/// vectors, and these vectors are the vertices of the secondary polytope.
/// Throws std::invalid_argument if t is not a triangulation of config.
RationalVector gkz_vector(const PointConfig2D& config, const ConfigTriangulation& t);

/// Convex hull of the gkz_vector images of all triangulations of config.
/// Throws std::invalid_argument for configurations with fewer than 4
/// points (the hull degenerates to a point: "dimension < 1").  GKZ vectors
/// of distinct triangulations are independent; threads > 1 computes them
/// concurrently (the result does not depend on the thread count).
Polytope secondary_polytope(const PointConfig2D& config, int threads = 1);

/// Parameters of the cluster construction: one positive value f[(i,j)] for
/// every ordered pair i, j in {1, ..., n+1} with i != j and i - j >= -1,
/// giving the inequality  x_i - x_j <= f[(i,j)].  There are n(n+3)/2 such
/// pairs.
struct ClusterParams {
  int n = 0;
  std::map<std::pair<int, int>, Rational> f;
};

/// Shipped parameter choice for 1 <= n <= 5, known (re-verified by the
/// test suite) to realise the n-dimensional associahedron.
ClusterParams default_cluster_params(int n);

/// The polytope { x in R^{n+1} : sum x_i = 0, x_i - x_j <= f[(i,j)] }.
/// Every inequality must be facet-defining and the region a bounded
/// n-polytope; otherwise math_check_error is thrown ("parameters not
/// suitable", naming an offending pair, or "parameters do not define a
/// polytope").
Polytope cluster_associahedron(const ClusterParams& params);

/// Parameters of the Minkowski construction: one positive weight for every
/// interval [i..j] of {1, ..., n+1} with i < j, scaling the simplex
/// conv{e_i, ..., e_j}.
struct MinkowskiParams {
  int n = 0;
  std::map<std::pair<int, int>, Rational> alpha;
};

/// All weights 1, the classical choice.
MinkowskiParams default_minkowski_params(int n);

/// The weighted Minkowski sum  sum_{i<j} alpha[(i,j)] conv{e_i, ..., e_j}
/// in R^{n+1}, an n-polytope inside a hyperplane sum x_i = const.
Polytope minkowski_associahedron(const MinkowskiParams& params);

}  // namespace assoc
