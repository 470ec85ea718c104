#pragma once

// Weakly convex planar point configurations and their triangulations.
// "Weakly convex" means: all points lie on the boundary of their convex
// hull, listed 1..m in counterclockwise order, with at most one point in
// the relative interior of each hull edge.  These are exactly the
// configurations whose triangulations behave like polygon triangulations
// (every full triangulation uses each hull corner), which is what the
// secondary-polytope construction needs.

#include "assoc/polytope.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace assoc {

struct PointConfig2D {
  std::vector<RationalVector> points;  // 2-vectors, ccw boundary order
  int size() const { return static_cast<int>(points.size()); }
  /// Point by 1-based label, matching the combinatorial conventions.
  const RationalVector& at(int label) const { return points.at(label - 1); }
};

/// Validates and wraps a point list.  Throws std::invalid_argument unless
/// the points are distinct, in weakly convex position, listed ccw starting
/// anywhere, and no hull edge carries more than one extra point.
PointConfig2D make_point_config(const std::vector<RationalVector>& pts);

/// Area of the convex hull of the configuration (shoelace over the ccw
/// boundary cycle; collinear points contribute nothing).
Rational hull_area(const PointConfig2D& config);

/// 1-based labels of the hull corners (extreme points) of the configuration.
std::vector<int> corner_labels(const PointConfig2D& config);

/// A triangulation of a configuration: full-dimensional triangles with
/// vertices at configuration points, pairwise disjoint interiors, covering
/// the hull.  Points interior to hull edges may be skipped; used_labels
/// lists the labels that appear in some triangle.
struct ConfigTriangulation {
  std::vector<std::array<int, 3>> triangles;  // sorted triples, sorted list
  std::vector<int> used_labels;               // sorted, 1-based
  bool operator==(const ConfigTriangulation&) const = default;
};

/// All triangulations of the configuration, in lexicographic order of
/// their triangle lists.  Exhaustive exact search; intended for small m
/// (the workbench guards call sites at m <= 9).
std::vector<ConfigTriangulation> enumerate_config_triangulations(const PointConfig2D& config);

/// Affine map x -> linear * x + shift for plane configurations.
struct AffineMap2D {
  RationalMatrix linear;  // 2x2
  RationalVector shift;   // 2
};

/// m points on the parabola y = x^2 at abscissas a, a+b, ..., a+(m-1)b,
/// optionally pushed through an invertible affine map.  Labels are
/// reordered so the result is ccw.  Throws std::invalid_argument for
/// m < 4, b == 0 (coincident points), or a singular map.
PointConfig2D parabola_config(int m, const Rational& a, const Rational& b,
                              const std::optional<AffineMap2D>& map = std::nullopt);

/// Deterministic pseudo-random strictly convex m-gon: rational points,
/// distinct, strictly convex position, ccw.  Same seed, same polygon.
PointConfig2D random_convex_polygon(int m, std::uint64_t seed);

}  // namespace assoc
