#pragma once

#include "fewnomial/ksum.hpp"

#include <optional>
#include <vector>

namespace fewnomial {

/// Bisection hands over to Newton once the bracket's relative width (in
/// the normalized variable) is at most kNewtonSwitch / gamma. Safe
/// constants are those below (3 - sqrt 7)/2 ~ 0.177.
inline constexpr double kNewtonSwitch = 0.125;

/// Constant C of the evaluation budget  C k (log2 d + log2 log2(R/eps) + 1).
inline constexpr double kBudgetConstant = 4.0;

struct SolveRequest {
  KSum f;
  Rational R;
  Rational epsilon;
  /// Throw DomainError if the evaluation count exceeds the budget.
  bool budget_check = false;
  /// Starting working precision; 0 picks max(128, 4 log2(R/eps)).
  unsigned precision_bits = 0;
};

struct RootApprox {
  Real value;
  /// The root lies in [value - radius, value + radius].
  Real radius;
  int bisection_steps = 0;
  int newton_steps = 0;
  /// Full k-sum evaluations (f, g or g') in the final attempt.
  int evaluations = 0;
  /// Attempts abandoned for lack of precision.
  int precision_restarts = 0;
  unsigned precision_bits = 0;
  /// Root lies in (0, eps/2]; reported as 0 with radius eps.
  bool near_zero = false;
  /// |x_{k+1} - x_k| for each Newton step, in the original variable.
  std::vector<Real> newton_corrections;
};

/// 1 if the one-alternation sum f has a root in (0, R), else 0.
int count_roots(const KSum& f, const Rational& R);

/// Certified approximation of the unique root in (0, R), if any.
std::optional<RootApprox> solve_one_alternation(const SolveRequest& req);

/// Root of x^a = c for c > 0, a != 0, via one call of the x^r oracle and a
/// sign-change certificate. R only sizes the working precision.
RootApprox solve_binomial(const Rational& a, const Rational& c, const Rational& R,
                          const Rational& epsilon, unsigned precision_bits = 0);

/// C k (log2 max(d,2) + log2 max(log2(R/eps), 2) + 1).
double evaluation_budget(const KSum& f, const Rational& R, const Rational& epsilon);

/// True iff f changes sign across [value - radius, value + radius] when
/// evaluated at `bits` of precision (left end clamped at 0+).
bool certify_sign_change(const KSum& f, const Real& value, const Real& radius, unsigned bits);

unsigned default_precision_bits(const Rational& R, const Rational& epsilon);

}  // namespace fewnomial
