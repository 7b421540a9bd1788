#pragma once

#include "fewnomial/numeric.hpp"

#include <vector>

namespace fewnomial {

/// f_i = x^{D row i} + c_i, i = 1..n, restricted to the wedge
/// { x >= 0, sum x_i^2 <= R^2 }.
struct BinomialSystem {
  IntMatrix D;
  RationalVector c;
  Rational R;
  /// Per-coordinate absolute accuracy.
  Rational epsilon;
  /// Starting working precision; 0 derives it from R, epsilon and the
  /// sizes of the unimodular transforms.
  unsigned precision_bits = 0;

  /// Throws NotSquare, DimensionMismatch or DomainError.
  void validate() const;
};

struct WedgeRoot {
  std::vector<Real> coords;
  /// The true root lies in the box prod [coords_j - radius_j, coords_j + radius_j].
  std::vector<Real> radius;
  unsigned precision_bits = 0;
};

/// |det D|, the number of roots in (C*)^n; 0 for a degenerate system.
BigInt complex_root_count(const IntMatrix& D);

/// The unique open-orthant root if it exists and lies in the wedge,
/// otherwise empty. DegenerateSystem when det D = 0.
std::vector<WedgeRoot> solve_wedge(const BinomialSystem& sys);

/// True iff every x^{D row i} + c_i changes sign (weakly) across the box,
/// evaluated at `bits`.
bool certify_box(const BinomialSystem& sys, const WedgeRoot& root, unsigned bits);

}  // namespace fewnomial
