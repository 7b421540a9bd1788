#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fewnomial {

namespace mp = boost::multiprecision;

using BigInt = mp::mpz_int;
using Rational = mp::mpq_rational;
// Variable-precision binary float. Expression templates are off so that
// every intermediate is a concrete value carrying its own precision.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;
using Index = Eigen::Index;

enum class ErrorCode {
  DimensionMismatch,
  EmptySystem,
  HasInequalities,
  InvalidCount,
  DomainError,
  TooManyAlternations,
  SingleTerm,
  PrecisionExhausted,
  NotSquare,
  DegenerateSystem,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Decimal digits needed to hold `bits` binary digits (rounded up).
unsigned digits10_for_bits(unsigned bits);

/// A zero of the given binary precision.
Real real_zero(unsigned bits);
Real to_real(const Rational& q, unsigned bits);
Real to_real(const BigInt& z, unsigned bits);
Real to_real(long v, unsigned bits);
/// Re-rounds `x` to `bits` of precision.
Real with_precision(const Real& x, unsigned bits);
unsigned precision_bits(const Real& x);

/// Exact base^e for integer e (negative e inverts; 0^negative throws).
Rational pow_int(const Rational& base, long e);
/// Exact base^e for e >= 0 (negative e throws).
BigInt pow_int(const BigInt& base, long e);

bool is_integer(const Rational& q);
BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// Parses an integer, a decimal (with optional exponent such as 1e-12) or
/// a fraction p/q into an exact rational.
Rational parse_rational(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);
/// Fixed number of significant digits in scientific-or-fixed form, stable
/// for a given precision.
std::string to_string(const Real& x, int significant_digits = 30);

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Real& x) { return x.sign(); }

}  // namespace fewnomial
