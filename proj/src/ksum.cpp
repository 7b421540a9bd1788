#include "fewnomial/ksum.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fewnomial {

KSum::KSum(std::vector<Term> terms) {
  std::map<Rational, Rational> merged;
  for (auto& t : terms) merged[t.exponent] += t.coefficient;
  for (auto& [a, c] : merged)
    if (c != 0) terms_.push_back({a, c});
}

bool KSum::integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return is_integer(t.exponent); });
}

KSum operator*(const Rational& c, const KSum& f) {
  std::vector<Term> t = f.terms();
  for (auto& term : t) term.coefficient *= c;
  return KSum(std::move(t));
}

KSum operator-(const KSum& f) { return Rational(-1) * f; }

KSum shift_exponents(const KSum& f, const Rational& t) {
  std::vector<Term> out = f.terms();
  for (auto& term : out) term.exponent += t;
  return KSum(std::move(out));
}

Rational degree(const KSum& f) {
  if (f.size() < 2) return 0;
  const Rational spread = f.leading().exponent - f.lowest().exponent;
  if (f.integral()) return spread;
  Rational gap = spread;
  for (std::size_t i = 1; i < f.size(); ++i)
    gap = std::min(gap, Rational(f.terms()[i].exponent - f.terms()[i - 1].exponent));
  return spread / std::min(Rational(1), gap);
}

int sign_alternations(const KSum& f) {
  int count = 0;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (sign(f.terms()[i].coefficient) != sign(f.terms()[i - 1].coefficient)) ++count;
  return count;
}

namespace {

Real power(const Real& x, const Rational& a) {
  const unsigned bits = precision_bits(x);
  Real r = real_zero(bits);
  if (is_integer(a)) {
    mpfr_pow_z(r.backend().data(), x.backend().data(),
               mp::numerator(a).backend().data(), MPFR_RNDN);
  } else {
    // Carry the exponent with extra bits so that large |a log x| keeps
    // full relative accuracy.
    const Real ar = to_real(a, bits + 64);
    mpfr_pow(r.backend().data(), x.backend().data(), ar.backend().data(), MPFR_RNDN);
  }
  return r;
}

}  // namespace

Real evaluate(const KSum& f, const Real& x) {
  if (x <= 0) throw Error(ErrorCode::DomainError, "k-sums are evaluated on x > 0 only");
  const unsigned bits = precision_bits(x);
  Real sum = real_zero(bits);
  for (const auto& t : f.terms()) sum += to_real(t.coefficient, bits) * power(x, t.exponent);
  return sum;
}

double evaluate(const KSum& f, double x) {
  if (!(x > 0)) throw Error(ErrorCode::DomainError, "k-sums are evaluated on x > 0 only");
  double sum = 0;
  for (const auto& t : f.terms())
    sum += t.coefficient.convert_to<double>() * std::pow(x, t.exponent.convert_to<double>());
  return sum;
}

Rational evaluate_exact(const KSum& f, const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::DomainError, "k-sums are evaluated on x > 0 only");
  if (!f.integral())
    throw Error(ErrorCode::DomainError, "exact evaluation needs integer exponents");
  Rational sum = 0;
  for (const auto& t : f.terms())
    sum += t.coefficient * pow_int(x, mp::numerator(t.exponent).convert_to<long>());
  return sum;
}

int sign_near_zero(const KSum& f) { return f.is_zero() ? 0 : sign(f.lowest().coefficient); }

KSum derivative(const KSum& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.exponent != 0) out.push_back({t.exponent - 1, t.exponent * t.coefficient});
  return KSum(std::move(out));
}

Real NormalizationRecord::to_original(const Real& y) const {
  return power(y, Rational(1) / scale);
}

Real NormalizationRecord::to_normalized(const Real& x) const { return power(x, scale); }

NormalizedKSum normalize(const KSum& f) {
  if (f.size() < 2) throw Error(ErrorCode::SingleTerm, "normalization needs two or more terms");
  if (sign_alternations(f) > 1)
    throw Error(ErrorCode::TooManyAlternations, "more than one sign alternation");

  NormalizationRecord rec;
  rec.sign_flip = f.leading().coefficient < 0;
  const KSum h = rec.sign_flip ? -f : f;

  // With at most one alternation and a positive leading coefficient, the
  // positive terms are exactly the top block of exponents.
  std::size_t first_pos = h.size() - 1;
  while (first_pos > 0 && h.terms()[first_pos - 1].coefficient > 0) --first_pos;
  rec.m = h.terms()[first_pos].exponent;
  rec.M = h.leading().exponent;

  if (rec.M > rec.m) {
    rec.shift = rec.m;
    rec.scale = rec.M - rec.m;
  } else {
    // One positive term: anchor the largest negative exponent at 0
    // instead, so the positive term lands on exponent 1.
    const Rational below = h.terms()[first_pos - 1].exponent;
    rec.shift = below;
    rec.scale = rec.m - below;
  }

  std::vector<Term> g;
  for (const auto& t : h.terms())
    g.push_back({(t.exponent - rec.shift) / rec.scale, t.coefficient});
  return {KSum(std::move(g)), rec};
}

Rational power_gamma(const Rational& r) {
  const Rational a = mp::abs(r);
  if (a >= 1) return Rational(ceil(a));
  if (r > 0) return 2;
  if (r < 0) return 1;
  return 0;
}

Rational gamma_bound(const KSum& f) {
  Rational g = 0;
  for (const auto& t : f.terms()) g = std::max(g, power_gamma(t.exponent));
  const Rational d = degree(f);
  if (d > 0) g = std::min(g, d);
  return std::max(g, Rational(1));
}

}  // namespace fewnomial
