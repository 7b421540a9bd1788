#include "fewnomial/numeric.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace fewnomial {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::HasInequalities: return "HasInequalities";
    case ErrorCode::InvalidCount: return "InvalidCount";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TooManyAlternations: return "TooManyAlternations";
    case ErrorCode::SingleTerm: return "SingleTerm";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

unsigned precision_bits(const Real& x) {
  return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
}

Real real_zero(unsigned bits) {
  Real r;
  r.backend().precision(digits10_for_bits(bits));
  mpfr_set_prec(r.backend().data(), bits);
  mpfr_set_zero(r.backend().data(), 1);
  return r;
}

Real to_real(const Rational& q, unsigned bits) {
  Real r = real_zero(bits);
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const BigInt& z, unsigned bits) {
  Real r = real_zero(bits);
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(long v, unsigned bits) {
  Real r = real_zero(bits);
  mpfr_set_si(r.backend().data(), v, MPFR_RNDN);
  return r;
}

Real with_precision(const Real& x, unsigned bits) {
  Real r = real_zero(bits);
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

BigInt pow_int(const BigInt& base, long e) {
  if (e < 0) throw Error(ErrorCode::DomainError, "negative exponent for an integer power");
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), static_cast<unsigned long>(e));
  return r;
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw Error(ErrorCode::DomainError, "zero to a negative power");
    return Rational(0);
  }
  if (e == std::numeric_limits<long>::min())
    throw Error(ErrorCode::DomainError, "exponent out of range");
  const long m = e < 0 ? -e : e;
  Rational r(pow_int(BigInt(mp::numerator(base)), m),
             pow_int(BigInt(mp::denominator(base)), m));
  return e < 0 ? Rational(1) / r : r;
}

bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.backend().data(), mp::numerator(q).backend().data(),
             mp::denominator(q).backend().data());
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.backend().data(), mp::numerator(q).backend().data(),
             mp::denominator(q).backend().data());
  return r;
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError,
              "malformed number '" + std::string(text) + "'");
}

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad_number(whole);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_number(whole);
  // A leading 0 would select octal in the string constructor.
  const auto nz = digits.find_first_not_of('0');
  if (nz == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(nz)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) bad_number(whole);
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(text.substr(0, slash), whole);
    BigInt den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) bad_number(whole);
    value = Rational(num, den);
  } else {
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view ex = text.substr(e + 1);
      bool eneg = false;
      if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
        eneg = ex.front() == '-';
        ex.remove_prefix(1);
      }
      if (ex.empty() || ex.size() > 6) bad_number(whole);
      exp10 = parse_digits(ex, whole).convert_to<long>();
      if (eneg) exp10 = -exp10;
      text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
      if (ip.empty() && fp.empty()) bad_number(whole);
      digits = std::string(ip) + std::string(fp);
      exp10 -= static_cast<long>(fp.size());
    } else {
      digits = std::string(text);
    }
    value = Rational(parse_digits(digits, whole));
    value *= pow_int(Rational(10), exp10);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string to_string(const Real& x, int significant_digits) {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << x;
  return os.str();
}

}  // namespace fewnomial
