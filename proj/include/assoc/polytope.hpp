#pragma once

// Exact convex hulls of rational point sets in arbitrary ambient dimension.
// The polytope may be lower-dimensional than its ambient space; facets are
// facets of the polytope inside its own affine hull, described by supporting
// hyperplanes whose normals lie in the direction space of that affine hull.

#include "assoc/linalg.hpp"

#include <vector>

namespace assoc {

/// One facet: outward supporting halfspace  normal . x <= offset  together
/// with the (sorted) indices of the vertices lying on it.  The normal is the
/// canonical primitive integer vector of its ray and lies in the direction
/// space of the polytope's affine hull, so that facets of lower-dimensional
/// polytopes can be compared (e.g. for parallelism) without ambiguity.
struct Facet {
  RationalVector normal;
  Rational offset;
  std::vector<int> vertex_indices;
};

/// Affine hull as base point plus a basis of the direction space.
struct AffineHull {
  RationalVector point;
  std::vector<RationalVector> basis;
};

struct Polytope {
  int ambient_dim = 0;
  int intrinsic_dim = -1;
  std::vector<RationalVector> vertices;  // extreme points, lex sorted
  std::vector<Facet> facets;             // sorted by (normal, offset)
  AffineHull affine_hull;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int facet_count() const { return static_cast<int>(facets.size()); }
};

/// Exact convex hull.  Handles duplicate points, lower-dimensional input,
/// and all degeneracies (no perturbation).  Throws std::invalid_argument on
/// an empty input or mixed ambient dimensions.
Polytope convex_hull(const std::vector<RationalVector>& points);

/// True iff u and v are nonzero and u = c v with c < 0.
bool are_antiparallel(const RationalVector& u, const RationalVector& v);

/// Unsigned area of a triangle in the plane (inputs are 2-vectors).
Rational triangle_area(const RationalVector& a, const RationalVector& b,
                       const RationalVector& c);

/// Twice the signed area of the triangle (a,b,c); positive iff ccw.
Rational cross2(const RationalVector& a, const RationalVector& b,
                const RationalVector& c);

/// True iff x satisfies every facet inequality (membership in the affine
/// hull is checked as well).  Exact.
bool contains_point(const Polytope& p, const RationalVector& x);

}  // namespace assoc
