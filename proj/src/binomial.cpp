#include "fewnomial/binomial.hpp"

#include "fewnomial/lattice.hpp"
#include "fewnomial/roots1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fewnomial {

namespace {

Real log_of(const Real& x) {
  Real r = real_zero(precision_bits(x));
  mpfr_log(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real exp_of(const Real& u) {
  Real r = real_zero(precision_bits(u));
  mpfr_exp(r.backend().data(), u.backend().data(), MPFR_RNDN);
  return r;
}

Real expm1_of(const Real& u) {
  Real r = real_zero(precision_bits(u));
  mpfr_expm1(r.backend().data(), u.backend().data(), MPFR_RNDU);
  return r;
}

Real pow_z(const Real& x, const BigInt& e) {
  Real r = real_zero(precision_bits(x));
  mpfr_pow_z(r.backend().data(), x.backend().data(), e.backend().data(), MPFR_RNDN);
  return r;
}

constexpr double kExactTargetBits = 1 << 16;

Real pow2(long e, unsigned bits) {
  Real r = to_real(1L, bits);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

bool fits_long(const BigInt& z) {
  return z >= std::numeric_limits<long>::min() && z <= std::numeric_limits<long>::max();
}

// prod_j base_j^{row_j}, exactly.
Rational monomial_value(const RationalVector& base, const IntMatrix& M, Index row) {
  Rational v = 1;
  for (Index j = 0; j < M.cols(); ++j) v *= pow_int(base(j), M(row, j).convert_to<long>());
  return v;
}

// Monomial of an approximate point at `bits`.
Real monomial_value(const std::vector<Real>& x, const IntMatrix& M, Index row, unsigned bits) {
  Real v = to_real(1L, bits);
  for (Index j = 0; j < M.cols(); ++j) v *= pow_z(with_precision(x[j], bits), M(row, j));
  return v;
}

}  // namespace

void BinomialSystem::validate() const {
  if (D.rows() != D.cols()) throw Error(ErrorCode::NotSquare, "exponent matrix must be square");
  if (c.size() != D.rows())
    throw Error(ErrorCode::DimensionMismatch, "need one coefficient per row of D");
  for (Index i = 0; i < D.rows(); ++i) {
    for (Index j = 0; j < D.cols(); ++j)
      if (D(i, j) < 0) throw Error(ErrorCode::DomainError, "exponents must be nonnegative");
    if (c(i) == 0) throw Error(ErrorCode::DomainError, "coefficients must be nonzero");
  }
  if (!(R > 0)) throw Error(ErrorCode::DomainError, "R must be positive");
  if (!(epsilon > 0)) throw Error(ErrorCode::DomainError, "epsilon must be positive");
}

BigInt complex_root_count(const IntMatrix& D) { return mp::abs(determinant(D)); }

bool certify_box(const BinomialSystem& sys, const WedgeRoot& root, unsigned bits) {
  const Index n = sys.D.rows();
  std::vector<Real> lo, hi;
  for (Index j = 0; j < n; ++j) {
    const Real x = with_precision(root.coords[j], bits), r = with_precision(root.radius[j], bits);
    lo.push_back(std::max(x - r, real_zero(bits)));
    hi.push_back(x + r);
  }
  // With nonnegative exponents each monomial is nondecreasing in every
  // coordinate, so its range over the box is [m(lo), m(hi)].
  for (Index i = 0; i < n; ++i) {
    const Real target = to_real(Rational(-sys.c(i)), bits);
    if (monomial_value(lo, sys.D, i, bits) > target || monomial_value(hi, sys.D, i, bits) < target)
      return false;
  }
  return true;
}

std::vector<WedgeRoot> solve_wedge(const BinomialSystem& sys) {
  sys.validate();
  const Index n = sys.D.rows();
  if (complex_root_count(sys.D) == 0)
    throw Error(ErrorCode::DegenerateSystem, "det D = 0: the solution set is not finite");
  for (Index i = 0; i < n; ++i)
    if (sys.c(i) > 0) return {};

  const auto snf = smith_normal_form(sys.D);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!fits_long(snf.U(i, j)))
        throw Error(ErrorCode::PrecisionExhausted, "unimodular transform entries are too large");

  const RationalVector gamma = -sys.c;
  // gamma'_i = prod_j gamma_j^{U_ij} is formed exactly unless its size
  // would exceed kExactTargetBits; then only its logarithm is carried.
  std::vector<Rational> targets(n);
  std::vector<bool> exact(n, false);
  for (Index i = 0; i < n; ++i) {
    double size = 0;
    for (Index j = 0; j < n; ++j)
      size += std::fabs(snf.U(i, j).convert_to<double>()) *
              static_cast<double>(mpz_sizeinbase(mp::numerator(gamma(j)).backend().data(), 2) +
                                  mpz_sizeinbase(mp::denominator(gamma(j)).backend().data(), 2));
    exact[i] = size <= kExactTargetBits;
    if (exact[i]) targets[i] = monomial_value(gamma, snf.U, i);
  }

  // Extra bits cover the growth of the transforms.
  const unsigned transform_bits =
      static_cast<unsigned>(std::ceil((snf.h_U + snf.h_V) / std::log(2.0)));
  const unsigned initial =
      (sys.precision_bits ? sys.precision_bits : default_precision_bits(sys.R, sys.epsilon)) +
      transform_bits;

  for (unsigned bits = initial; bits <= 16 * initial; bits *= 2) {
    const Real rounding = pow2(-static_cast<long>(bits) + 8, bits);
    // log y_i with y_i^{Delta_ii} = gamma'_i, and a bound on its error.
    std::vector<Real> log_y(n), rel(n);
    for (Index i = 0; i < n; ++i) {
      if (exact[i]) {
        const auto y = solve_binomial(Rational(snf.D(i, i)), targets[i], sys.R, sys.epsilon, bits);
        const Real v = with_precision(y.value, bits), r = with_precision(y.radius, bits);
        if (!(v > r)) throw Error(ErrorCode::PrecisionExhausted, "transformed root not isolated from 0");
        log_y[i] = log_of(v);
        // |log y_true - log y| <= r / (y - r).
        rel[i] = r / (v - r);
        continue;
      }
      Real L = real_zero(bits), mag = real_zero(bits);
      for (Index j = 0; j < n; ++j) {
        const Real term = to_real(snf.U(i, j), bits) * log_of(to_real(gamma(j), bits));
        L += term;
        mag += mp::abs(term);
      }
      const Real d = to_real(snf.D(i, i), bits);
      log_y[i] = L / d;
      rel[i] = (mag + mp::abs(L) + 1) * rounding / d;
    }

    WedgeRoot root;
    root.precision_bits = bits;
    bool tight = true;
    const Rational eps = sys.epsilon;
    for (Index j = 0; j < n; ++j) {
      Real u = real_zero(bits), spread = real_zero(bits), mag = to_real(1L, bits);
      for (Index i = 0; i < n; ++i) {
        const Real vji = to_real(snf.V(j, i), bits);
        u += vji * log_y[i];
        spread += mp::abs(vji) * rel[i];
        mag += mp::abs(vji * log_y[i]);
      }
      spread += mag * rounding;
      const Real x = exp_of(u);
      const Real radius = x * expm1_of(spread) * 2;
      if (radius > to_real(eps, bits)) tight = false;
      root.coords.push_back(x);
      root.radius.push_back(radius);
    }
    if (!tight) continue;

    Real norm2 = real_zero(bits);
    for (const auto& x : root.coords) norm2 += x * x;
    if (norm2 > to_real(Rational(sys.R * sys.R), bits)) return {};

    if (!certify_box(sys, root, 2 * bits)) continue;
    return {std::move(root)};
  }
  throw Error(ErrorCode::PrecisionExhausted, "could not reach the requested accuracy");
}

}  // namespace fewnomial
