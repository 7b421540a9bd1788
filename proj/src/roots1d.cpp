#include "fewnomial/roots1d.hpp"

#include <algorithm>
#include <cmath>

namespace fewnomial {

namespace {

// Internal signal: the current working precision cannot certify.
struct NeedPrecision {};

double log2_of(const Rational& q) {
  Real r = to_real(q, 64);
  Real out = real_zero(64);
  mpfr_log2(out.backend().data(), r.backend().data(), MPFR_RNDN);
  return out.convert_to<double>();
}

Real exp_of(const Real& u) {
  Real r = real_zero(precision_bits(u));
  mpfr_exp(r.backend().data(), u.backend().data(), MPFR_RNDN);
  return r;
}

Real log_of(const Real& x) {
  Real r = real_zero(precision_bits(x));
  mpfr_log(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real pow2(long e, unsigned bits) {
  Real r = to_real(1L, bits);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

// Sign of f(x) with a crude rounding-error guard: 0 means "cannot tell at
// this precision" unless the computed value is exactly zero.
int guarded_sign(const KSum& f, const Real& x, bool* ambiguous = nullptr) {
  const unsigned bits = precision_bits(x);
  Real sum = real_zero(bits), mag = real_zero(bits);
  for (const auto& t : f.terms()) {
    const Real term = evaluate(KSum({t}), x);
    sum += term;
    mag += mp::abs(term);
  }
  const Real slack = mag * pow2(-static_cast<long>(bits) + 16, bits);
  const bool unclear = sum != 0 && mp::abs(sum) <= slack;
  if (ambiguous) *ambiguous = unclear;
  if (unclear) return 0;
  return sign(sum);
}

// Sign of f at a rational point, exactly when possible, otherwise with
// precision escalation up to `cap` bits. A value that stays ambiguous is
// treated as zero.
int sign_at(const KSum& f, const Rational& x, unsigned bits, unsigned cap) {
  if (f.integral()) return sign(evaluate_exact(f, x));
  for (unsigned b = bits; b <= cap; b *= 2) {
    bool unclear = false;
    const int s = guarded_sign(f, to_real(x, b), &unclear);
    if (!unclear) return s;
  }
  return 0;
}

struct Problem {
  const KSum& f;
  const NormalizedKSum& nk;
  KSum dg;
  int orientation;  // sign(g) = orientation * sign(f)
};

class Attempt {
 public:
  Attempt(const Problem& p, const Rational& R, const Rational& eps, unsigned bits)
      : p_(p), R_(R), eps_(eps), bits_(bits) {}

  std::optional<RootApprox> run();

 private:
  Real g(const Real& y) {
    ++out_.evaluations;
    return evaluate(p_.nk.g, y);
  }
  Real dg(const Real& y) {
    ++out_.evaluations;
    return evaluate(p_.dg, y);
  }
  // Sign of g at an original-variable point x > 0 (x <= 0 means 0+).
  int g_sign_at_x(const Real& x) {
    if (x <= 0) return p_.orientation * sign_near_zero(p_.f);
    ++out_.evaluations;
    bool unclear = false;
    const int s = guarded_sign(p_.f, x, &unclear);
    if (unclear) throw NeedPrecision{};
    return p_.orientation * s;
  }
  Real to_x(const Real& y) const { return p_.nk.record.to_original(y); }
  Real to_y(const Real& x) const { return p_.nk.record.to_normalized(x); }

  RootApprox finish(Real value, Real radius);

  const Problem& p_;
  Rational R_, eps_;
  unsigned bits_;
  RootApprox out_;
};

RootApprox Attempt::finish(Real value, Real radius) {
  if (!certify_sign_change(p_.f, value, radius, 2 * bits_)) throw NeedPrecision{};
  out_.evaluations += 2;
  out_.value = std::move(value);
  out_.radius = std::move(radius);
  out_.precision_bits = bits_;
  return out_;
}

std::optional<RootApprox> Attempt::run() {
  const unsigned b = bits_;
  const Real eps = to_real(eps_, b);
  const Real left = eps / 2;

  // g(0+) < 0 always after normalization; a root exists iff g(R) > 0.
  ++out_.evaluations;
  if (p_.orientation * sign_at(p_.f, R_, b, 16 * b) <= 0) return std::nullopt;
  if (g_sign_at_x(left) >= 0) {
    out_.near_zero = true;
    return finish(real_zero(b), eps);
  }

  const Rational& scale = p_.nk.record.scale;
  const Real scale_r = to_real(scale, b);
  const Rational gamma = gamma_bound(p_.nk.g);
  // Relative y-width 1/(8 gamma) corresponds to this width in u = log x.
  const Real switch_width =
      log_of(to_real(Rational(1), b) + to_real(Rational(kNewtonSwitch), b) / to_real(gamma, b)) /
      scale_r;

  Real u_lo = log_of(left), u_hi = log_of(to_real(R_, b));
  auto x_width = [&] { return exp_of(u_hi) - exp_of(u_lo); };

  while (u_hi - u_lo > switch_width && x_width() > 2 * eps) {
    const Real u = (u_lo + u_hi) / 2;
    ++out_.bisection_steps;
    const Real v = g(exp_of(scale_r * u));
    if (v < 0) {
      u_lo = u;
    } else if (v > 0) {
      u_hi = u;
    } else {
      const Real x = exp_of(u);
      return finish(x, std::min(eps, x * pow2(-static_cast<long>(b) / 2, b)));
    }
  }
  if (x_width() <= 2 * eps) {
    const Real lo = exp_of(u_lo), hi = exp_of(u_hi);
    return finish((lo + hi) / 2, (hi - lo) / 2);
  }

  Real y_lo = exp_of(scale_r * u_lo), y_hi = exp_of(scale_r * u_hi);
  Real y = exp_of(scale_r * (u_lo + u_hi) / 2);
  const Real floor_rel = pow2(-static_cast<long>(b) + 32, b);
  for (int iter = 0; iter < 200; ++iter) {
    const Real v = g(y);
    if (v == 0) {
      const Real x = to_x(y);
      return finish(x, std::min(eps, x * pow2(-static_cast<long>(b) / 2, b)));
    }
    (v < 0 ? y_lo : y_hi) = y;
    const Real dv = dg(y);
    ++out_.newton_steps;
    Real y_next = y - v / dv;
    if (!(dv > 0) || !(y_lo < y_next && y_next < y_hi)) y_next = (y_lo + y_hi) / 2;

    const Real x_next = to_x(y_next);
    const Real dx = mp::abs(x_next - to_x(y));
    out_.newton_corrections.push_back(dx);

    const Real x_lo = to_x(y_lo), x_hi = to_x(y_hi);
    if (x_hi - x_lo <= 2 * eps) return finish((x_lo + x_hi) / 2, (x_hi - x_lo) / 2);

    if (dx <= eps / 4) {
      const Real floor_r = x_next * floor_rel;
      if (floor_r > eps) throw NeedPrecision{};
      const Real r = std::min(eps, std::max(4 * dx, floor_r));
      const int below = g_sign_at_x(x_next - r);
      const int above = g_sign_at_x(x_next + r);
      if (below < 0 && above > 0) return finish(x_next, r);
      if (below < 0 && x_next - r > 0) y_lo = std::max(y_lo, to_y(x_next - r));
      if (above > 0) y_hi = std::min(y_hi, to_y(x_next + r));
    }
    y = y_next;
  }
  throw NeedPrecision{};
}

}  // namespace

unsigned default_precision_bits(const Rational& R, const Rational& epsilon) {
  const double ratio = log2_of(R / epsilon);
  return std::max(128u, static_cast<unsigned>(std::ceil(4 * std::max(ratio, 0.0))));
}

double evaluation_budget(const KSum& f, const Rational& R, const Rational& epsilon) {
  const double d = std::max(degree(f).convert_to<double>(), 2.0);
  const double ll = std::max(log2_of(R / epsilon), 2.0);
  return kBudgetConstant * static_cast<double>(f.size()) *
         (std::log2(d) + std::log2(ll) + 1);
}

bool certify_sign_change(const KSum& f, const Real& value, const Real& radius, unsigned bits) {
  const Real v = with_precision(value, bits), r = with_precision(radius, bits);
  const Real lo = v - r, hi = v + r;
  bool unclear_lo = false, unclear_hi = false;
  const int s_lo = lo <= 0 ? sign_near_zero(f) : guarded_sign(f, lo, &unclear_lo);
  const int s_hi = guarded_sign(f, hi, &unclear_hi);
  if (unclear_lo || unclear_hi) return false;
  // An endpoint that is an exact root also certifies.
  return s_lo == 0 || s_hi == 0 || s_lo != s_hi;
}

int count_roots(const KSum& f, const Rational& R) {
  const int alternations = sign_alternations(f);
  if (alternations > 1)
    throw Error(ErrorCode::TooManyAlternations, "more than one sign alternation");
  if (R <= 0) throw Error(ErrorCode::DomainError, "R must be positive");
  if (alternations == 0) return 0;
  const auto nk = normalize(f);
  const int orientation = nk.record.sign_flip ? -1 : 1;
  return orientation * sign_at(f, R, 128, 4096) > 0 ? 1 : 0;
}

std::optional<RootApprox> solve_one_alternation(const SolveRequest& req) {
  const int alternations = sign_alternations(req.f);
  if (alternations > 1)
    throw Error(ErrorCode::TooManyAlternations, "more than one sign alternation");
  if (!(req.epsilon > 0) || !(req.epsilon < req.R))
    throw Error(ErrorCode::DomainError, "need 0 < epsilon < R");
  if (alternations == 0) return std::nullopt;

  const auto nk = normalize(req.f);
  const Problem problem{req.f, nk, derivative(nk.g), nk.record.sign_flip ? -1 : 1};

  const unsigned initial =
      req.precision_bits ? req.precision_bits : default_precision_bits(req.R, req.epsilon);
  int restarts = 0;
  for (unsigned bits = initial; bits <= 16 * initial; bits *= 2) {
    try {
      auto result = Attempt(problem, req.R, req.epsilon, bits).run();
      if (result) {
        result->precision_restarts = restarts;
        if (req.budget_check &&
            result->evaluations > evaluation_budget(req.f, req.R, req.epsilon))
          throw Error(ErrorCode::DomainError,
                      "evaluation count " + std::to_string(result->evaluations) +
                          " exceeds the budget");
      }
      return result;
    } catch (const NeedPrecision&) {
      ++restarts;
    }
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "could not certify the root within the precision cap");
}

RootApprox solve_binomial(const Rational& a, const Rational& c, const Rational& R,
                          const Rational& epsilon, unsigned precision_bits) {
  if (a == 0) throw Error(ErrorCode::DomainError, "binomial exponent must be nonzero");
  if (c <= 0) throw Error(ErrorCode::DomainError, "binomial target must be positive");
  if (!(epsilon > 0)) throw Error(ErrorCode::DomainError, "epsilon must be positive");

  const KSum f({{a, Rational(1)}, {Rational(0), -c}});
  const double log2_root = log2_of(c) / a.convert_to<double>();
  const double log2_eps = log2_of(epsilon);
  unsigned bits = std::max(precision_bits ? precision_bits : default_precision_bits(R, epsilon),
                           static_cast<unsigned>(std::max(0.0, log2_root - log2_eps)) + 64);

  for (int restarts = 0; restarts < 5; ++restarts, bits *= 2) {
    RootApprox out;
    out.precision_bits = bits;
    out.precision_restarts = restarts;
    Real root = real_zero(bits);
    const Real target = to_real(c, bits);
    if (a > 0 && is_integer(a) && mp::numerator(a) <= 1UL << 30) {
      mpfr_rootn_ui(root.backend().data(), target.backend().data(),
                    mp::numerator(a).convert_to<unsigned long>(), MPFR_RNDN);
    } else {
      const Real inv = to_real(Rational(1) / a, bits + 64);
      mpfr_pow(root.backend().data(), target.backend().data(), inv.backend().data(), MPFR_RNDN);
    }
    out.evaluations = 1;
    Real radius = std::min(to_real(epsilon, bits), root * pow2(-static_cast<long>(bits) + 16, bits));
    if (certify_sign_change(f, root, radius, 2 * bits)) {
      out.evaluations += 2;
      out.value = std::move(root);
      out.radius = std::move(radius);
      return out;
    }
  }
  throw Error(ErrorCode::PrecisionExhausted, "binomial root could not be certified");
}

}  // namespace fewnomial
