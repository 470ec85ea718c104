#include "assoc/linalg.hpp"

#include <stdexcept>

namespace assoc {

bool IncrementalRank::add(RationalVector v) {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalRank: dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c != 0) v -= c * rows_[r];
  }
  Eigen::Index pivot = -1;
  for (Eigen::Index j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  v /= v[pivot];
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

int exact_rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IncrementalRank acc(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) acc.add(m.row(i).transpose());
  return acc.rank();
}

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  const Eigen::Index dim = points.front().size();
  IncrementalRank acc(dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != dim)
      throw std::invalid_argument("affine_dimension: mixed ambient dimensions");
    acc.add(points[i] - points.front());
  }
  return acc.rank();
}

RationalVector normal_from_directions(const std::vector<RationalVector>& dirs,
                                      Eigen::Index dim) {
  if (static_cast<Eigen::Index>(dirs.size()) != dim - 1)
    throw std::invalid_argument("normal_from_directions: need dim-1 directions");
  RationalMatrix d(dim - 1, dim);
  for (Eigen::Index i = 0; i < dim - 1; ++i) {
    if (dirs[i].size() != dim)
      throw std::invalid_argument("normal_from_directions: direction of wrong size");
    d.row(i) = dirs[i].transpose();
  }
  // Cofactor expansion along the (virtual) first row: n_j is the signed
  // minor obtained by deleting column j.
  RationalVector n(dim);
  RationalMatrix minor(dim - 1, dim - 1);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Eigen::Index c = 0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (k == j) continue;
      minor.col(c++) = d.col(k);
    }
    const Rational det = (dim == 1) ? Rational(1) : minor.determinant();
    n[j] = (j % 2 == 0) ? det : -det;
  }
  return n;
}

std::vector<int> greedy_affine_basis(const std::vector<RationalVector>& points) {
  if (points.empty()) throw std::invalid_argument("greedy_affine_basis: no points");
  std::vector<int> chosen = {0};
  IncrementalRank acc(points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i)
    if (acc.add(points[i] - points.front())) chosen.push_back(static_cast<int>(i));
  return chosen;
}

}  // namespace assoc
