#pragma once

#include "fewnomial/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fewnomial {

using Exponent = std::vector<long>;

/// Polynomial in n variables with nonnegative integer exponents and exact
/// rational coefficients. Zero coefficients are never stored.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(Index num_vars = 1);
  SparsePolynomial(Index num_vars, const std::map<Exponent, Rational>& terms);

  static SparsePolynomial constant(Index num_vars, const Rational& c);
  static SparsePolynomial variable(Index num_vars, Index i);

  /// Adds c * x^e, merging with an existing term.
  void add_term(const Exponent& e, const Rational& c);

  Index num_vars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest coordinate sum of an exponent vector; 0 for the zero polynomial.
  long total_degree() const;

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const Rational& c, const SparsePolynomial& a);
  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

 private:
  Index n_;
  std::map<Exponent, Rational> terms_;
};

SparsePolynomial pow(const SparsePolynomial& p, unsigned e);

/// p equations f_i = 0 followed by s strict inequalities f_{p+i} > 0.
struct SparseSystem {
  Index num_vars = 1;
  std::vector<SparsePolynomial> equations;
  std::vector<SparsePolynomial> inequalities;

  Index p() const { return static_cast<Index>(equations.size()); }
  Index s() const { return static_cast<Index>(inequalities.size()); }
  /// Throws EmptySystem or DimensionMismatch.
  void validate() const;
};

/// Convex hull of {O, e_1, ..., e_n} and every exponent vector of the
/// system.
Polytope support_hull(const SparseSystem& sys);

/// Number of distinct exponent vectors over all polynomials (a constant
/// term counts as O).
long monomial_count(const SparseSystem& sys);
/// Maximum total degree over all polynomials.
long max_total_degree(const SparseSystem& sys);

/// min{n+1, (s+1)/(s-1)} 2^n s^n Vol(Q) for s > 0, 2^{n-1} Vol(Q) for
/// s = 0. The ratio is taken as infinite at s = 1.
Rational component_bound(const SparseSystem& sys);

/// (1/min{2,n}) Vol(conv({O} u supp f)). Valid only for compact zero sets
/// without isolated points; the hypothesis is not checked.
Rational compact_hypersurface_bound(const SparsePolynomial& f);

/// 2^{n-1} Vol(Q) for systems of equations only.
Rational variety_bound(const SparseSystem& sys);

// Closed forms depending only on n, s and the monomial count k.
BigInt smooth_knomial_bound(long n, long k);
Rational positive_orthant_knomial_bound(long n, long k);
BigInt variety_knomial_bound(long n, long k);
BigInt semialgebraic_knomial_bound(long n, long s, long k);

struct ClassicalBounds {
  long degree = 0;
  /// (sd+1)(2sd+1)^n for s > 0, d(2d-1)^n for s = 0.
  BigInt milnor_thom;
  /// (p+s)^n d^n; the big-O constant of the original is unknown and is
  /// taken as 1.
  BigInt basu_form;
};
ClassicalBounds classical_bounds(const SparseSystem& sys);

enum class BoundKind {
  MainTheorem,
  LemmaCompact,
  LemmaVariety,
  KnomialSmooth,
  KnomialVariety,
  KnomialSemialgebraic,
  ClassicalMilnorThom,
  ClassicalBasuForm,
};

/// Stable machine-readable key, e.g. "main_thm_1".
std::string_view key(BoundKind kind);

struct BoundEntry {
  BoundKind kind;
  Rational value;
  bool applicable = true;
  /// True when the value relies on hypotheses this library cannot verify
  /// (compactness, smoothness, unknown constants).
  bool conditional = false;
  std::string note;
};

struct BoundReport {
  long n = 0, p = 0, s = 0, k = 0, degree = 0;
  Rational volume_q;
  std::vector<BoundEntry> entries;
  /// Smallest applicable unconditional bound.
  BoundKind smallest = BoundKind::MainTheorem;

  const BoundEntry& at(BoundKind kind) const;
};

BoundReport compare_bounds(const SparseSystem& sys);

}  // namespace fewnomial
