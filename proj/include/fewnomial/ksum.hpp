#pragma once

#include "fewnomial/numeric.hpp"

#include <vector>

namespace fewnomial {

struct Term {
  Rational exponent;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Univariate exponential sum  sum_a c_a x^a  with exact rational exponents
/// and coefficients. Terms are kept sorted by strictly increasing exponent
/// with no zero coefficients; the empty sum is the zero function.
class KSum {
 public:
  KSum() = default;
  explicit KSum(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// All exponents are integers.
  bool integral() const;
  const Term& lowest() const { return terms_.front(); }
  const Term& leading() const { return terms_.back(); }

  friend bool operator==(const KSum&, const KSum&) = default;

 private:
  std::vector<Term> terms_;
};

KSum operator*(const Rational& c, const KSum& f);
KSum operator-(const KSum& f);
/// x^t * f(x).
KSum shift_exponents(const KSum& f, const Rational& t);

/// a_max - a_min for integral sums; otherwise that spread divided by
/// min{1, smallest gap}. Zero for a monomial.
Rational degree(const KSum& f);
int sign_alternations(const KSum& f);

/// f(x) at the precision of x. Integer powers use binary exponentiation.
Real evaluate(const KSum& f, const Real& x);
double evaluate(const KSum& f, double x);
/// Exact value; requires integral exponents.
Rational evaluate_exact(const KSum& f, const Rational& x);
/// Sign of f(x) as x -> 0+, i.e. the sign of the lowest-order coefficient.
int sign_near_zero(const KSum& f);

KSum derivative(const KSum& f);

/// Inverse data for the transform  g(y) = sign * x^{-shift} f(x),
/// x = y^{1/scale}.  `m` and `M` are the smallest positive-coefficient
/// exponent and the largest exponent of the sign-fixed input.
struct NormalizationRecord {
  bool sign_flip = false;
  Rational m, M;
  Rational shift, scale;

  Real to_original(const Real& y) const;
  Real to_normalized(const Real& x) const;
};

struct NormalizedKSum {
  KSum g;
  NormalizationRecord record;
};

/// Makes the leading coefficient positive, divides by a power of x and
/// rescales the variable so the positive-coefficient exponents lie in
/// [0, 1] with the top one at 1 and all negative-coefficient exponents
/// below 0. The result is strictly increasing on (0, inf) and has the same
/// positive roots as f under the record.
NormalizedKSum normalize(const KSum& f);

/// Gamma constant of a single power x^r.
Rational power_gamma(const Rational& r);
/// Max of the per-term gamma constants, capped by the degree when the
/// degree is positive; never below 1.
Rational gamma_bound(const KSum& f);

}  // namespace fewnomial
