#pragma once

// Exact rank bookkeeping and the generalized cross product.  These are the
// only linear-algebra primitives the hull code needs beyond what Eigen's
// FullPivLU already gives us over an exact scalar.

#include "assoc/rational.hpp"

namespace assoc {

/// Maintains a row-echelon basis of the span of the vectors fed to add().
/// Exact fraction-based Gaussian elimination; add() is O(rank * dim).
class IncrementalRank {
 public:
  explicit IncrementalRank(Eigen::Index dim) : dim_(dim) {}

  /// Returns true iff v enlarged the span.
  bool add(RationalVector v);

  int rank() const { return static_cast<int>(rows_.size()); }
  Eigen::Index dim() const { return dim_; }

 private:
  Eigen::Index dim_;
  std::vector<RationalVector> rows_;  // echelon rows, pivot normalised to 1
  std::vector<Eigen::Index> pivots_;  // pivot column of rows_[i]
};

/// Rank of an arbitrary rational matrix, computed exactly.
int exact_rank(const RationalMatrix& m);

/// Dimension of the affine hull of the points: -1 for the empty set,
/// 0 for a single (repeated) point, and so on.  All points must share
/// the same ambient dimension.
int affine_dimension(const std::vector<RationalVector>& points);

/// Given dim-1 direction vectors in Q^dim, returns the vector n with
///   v . n = det([v; dirs])   for every v,
/// i.e. the generalized cross product.  n is zero iff the directions are
/// linearly dependent, and otherwise spans the orthogonal complement of
/// their span.  (With zero directions and dim == 1 this returns [1].)
RationalVector normal_from_directions(const std::vector<RationalVector>& dirs,
                                      Eigen::Index dim);

/// Indices into `points` of a greedy affine basis: the first point plus a
/// maximal rank-increasing subset, scanning in order.  The returned list
/// has affine_dimension(points)+1 entries.  Requires points nonempty.
std::vector<int> greedy_affine_basis(const std::vector<RationalVector>& points);

}  // namespace assoc
