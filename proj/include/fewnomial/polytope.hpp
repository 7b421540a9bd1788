#pragma once

#include "fewnomial/numeric.hpp"

#include <vector>

namespace fewnomial {

using Point = RationalVector;

/// Supporting inequality `offset + normal . x >= 0`, expressed in the
/// coordinates of the polytope's affine frame (see Polytope::frame_coords).
struct Facet {
  RationalVector normal;
  Rational offset;
  std::vector<Index> vertices;  // indices into Polytope::vertices()
};

/// Convex hull of a finite rational point set, computed exactly.
///
/// Lower-dimensional hulls are handled by working in a coordinate
/// projection that is injective on the affine hull, so facets, membership
/// and volume never need tolerance.
class Polytope {
 public:
  Polytope(std::vector<Point> generators, Index ambient_dim);

  Index ambient_dim() const { return ambient_dim_; }
  /// Dimension of the affine hull; -1 never occurs since generators are
  /// nonempty.
  Index dimension() const { return static_cast<Index>(frame_coords_.size()); }
  bool full_dimensional() const { return dimension() == ambient_dim_; }

  const std::vector<Point>& generators() const { return generators_; }
  /// Extreme points, lexicographically sorted.
  const std::vector<Point>& vertices() const { return vertices_; }
  /// Facets of the hull inside its affine hull. Empty when dimension() < 2
  /// is handled by interval logic instead.
  const std::vector<Facet>& facets() const { return facets_; }
  /// Coordinates kept by the projection onto the affine frame.
  const std::vector<Index>& frame_coords() const { return frame_coords_; }

  bool contains(const Point& x) const;
  /// n! times the Euclidean volume; zero when not full-dimensional.
  const Rational& normalized_volume() const { return volume_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  Index ambient_dim_;
  std::vector<Point> generators_;
  std::vector<Point> vertices_;
  std::vector<Index> frame_coords_;
  std::vector<Point> frame_basis_;  // row-reduced direction basis
  std::vector<Facet> facets_;
  Rational volume_;
};

Polytope convex_hull(const std::vector<Point>& points, Index ambient_dim);
Rational normalized_volume(const Polytope& p);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rational& s);
bool contains(const Polytope& p, const Point& x);

/// The standard simplex conv{O, e_1, ..., e_n}.
Polytope standard_simplex(Index n);

/// Exact determinant of a square rational matrix by Gaussian elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  const Index n = a.rows();
  Scalar det(1);
  for (Index c = 0; c < n; ++c) {
    Index pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Index r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Scalar f = a(r, c) / a(c, c);
      for (Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

/// Lexicographic order on points; used for deterministic vertex output.
bool lex_less(const Point& a, const Point& b);

}  // namespace fewnomial
