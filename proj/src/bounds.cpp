#include "fewnomial/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fewnomial {

SparsePolynomial::SparsePolynomial(Index num_vars) : n_(num_vars) {
  if (n_ < 1)
    throw Error(ErrorCode::DimensionMismatch, "polynomial needs at least one variable");
}

SparsePolynomial::SparsePolynomial(Index num_vars,
                                   const std::map<Exponent, Rational>& terms)
    : SparsePolynomial(num_vars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

SparsePolynomial SparsePolynomial::constant(Index num_vars, const Rational& c) {
  SparsePolynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(Index num_vars, Index i) {
  SparsePolynomial p(num_vars);
  Exponent e(num_vars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<Index>(e.size()) != n_)
    throw Error(ErrorCode::DimensionMismatch, "exponent vector of wrong length");
  if (std::any_of(e.begin(), e.end(), [](long v) { return v < 0; }))
    throw Error(ErrorCode::DomainError, "negative exponent in a polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long SparsePolynomial::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
  return d;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "variable count mismatch");
  SparsePolynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SparsePolynomial operator*(const Rational& c, const SparsePolynomial& a) {
  SparsePolynomial r(a.n_);
  for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
  return r;
}

SparsePolynomial pow(const SparsePolynomial& p, unsigned e) {
  SparsePolynomial r = SparsePolynomial::constant(p.num_vars(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

void SparseSystem::validate() const {
  if (equations.empty() && inequalities.empty())
    throw Error(ErrorCode::EmptySystem, "system has no equations or inequalities");
  for (const auto* list : {&equations, &inequalities})
    for (const auto& f : *list)
      if (f.num_vars() != num_vars)
        throw Error(ErrorCode::DimensionMismatch,
                    "polynomial variable count differs from the system's");
}

namespace {

Point to_point(const Exponent& e) {
  Point p(static_cast<Index>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) p(static_cast<Index>(i)) = e[i];
  return p;
}

std::set<Exponent> all_exponents(const SparseSystem& sys) {
  std::set<Exponent> out;
  for (const auto* list : {&sys.equations, &sys.inequalities})
    for (const auto& f : *list)
      for (const auto& [e, c] : f.terms()) out.insert(e);
  return out;
}

Rational two_pow(long e) { return pow_int(Rational(2), e); }

void require_counts(long n, long k) {
  if (n < 1 || k < 1)
    throw Error(ErrorCode::InvalidCount, "n and k must both be at least 1");
}

}  // namespace

Polytope support_hull(const SparseSystem& sys) {
  sys.validate();
  const Index n = sys.num_vars;
  std::vector<Point> g;
  g.push_back(Point::Zero(n));
  for (Index i = 0; i < n; ++i) g.push_back(Point::Unit(n, i));
  for (const auto& e : all_exponents(sys)) g.push_back(to_point(e));
  return Polytope(std::move(g), n);
}

long monomial_count(const SparseSystem& sys) {
  return static_cast<long>(all_exponents(sys).size());
}

long max_total_degree(const SparseSystem& sys) {
  long d = 0;
  for (const auto* list : {&sys.equations, &sys.inequalities})
    for (const auto& f : *list) d = std::max(d, f.total_degree());
  return d;
}

Rational component_bound(const SparseSystem& sys) {
  const Rational vol = support_hull(sys).normalized_volume();
  const long n = sys.num_vars;
  const long s = sys.s();
  if (s == 0) return two_pow(n - 1) * vol;
  Rational factor(n + 1);
  if (s > 1) factor = std::min(factor, Rational(s + 1, s - 1));
  return factor * two_pow(n) * pow_int(Rational(s), n) * vol;
}

Rational compact_hypersurface_bound(const SparsePolynomial& f) {
  const Index n = f.num_vars();
  std::vector<Point> g{Point::Zero(n)};
  for (const auto& [e, c] : f.terms()) g.push_back(to_point(e));
  const Polytope q(std::move(g), n);
  return q.normalized_volume() / Rational(std::min<long>(2, n));
}

Rational variety_bound(const SparseSystem& sys) {
  if (sys.s() > 0)
    throw Error(ErrorCode::HasInequalities,
                "variety bound applies to systems of equations only");
  return two_pow(sys.num_vars - 1) * support_hull(sys).normalized_volume();
}

BigInt smooth_knomial_bound(long n, long k) {
  require_counts(n, k);
  return pow_int(BigInt(2), n - 1) * pow_int(BigInt(n + 1), k + 1) *
         pow_int(BigInt(2), k * (k + 1) / 2);
}

Rational positive_orthant_knomial_bound(long n, long k) {
  require_counts(n, k);
  return Rational(pow_int(BigInt(n + 1), k) * pow_int(BigInt(2), k * (k - 1) / 2), 2);
}

BigInt variety_knomial_bound(long n, long k) {
  require_counts(n, k);
  // 4^{n - 1/2} = 2^{2n - 1}
  return pow_int(BigInt(2), 2 * n - 1) * pow_int(BigInt(2 * n + 1), k + 1) *
         pow_int(BigInt(2), k * (k + 1) / 2);
}

BigInt semialgebraic_knomial_bound(long n, long s, long k) {
  require_counts(n, k);
  if (s < 0) throw Error(ErrorCode::InvalidCount, "s must be nonnegative");
  return pow_int(BigInt(2), 2 * n - 1) * pow_int(BigInt(s + 1), n) *
         pow_int(BigInt(2 * (n + 1) * (s + 1) + 1), k + 1) *
         pow_int(BigInt(2), k * (k + 1) / 2);
}

ClassicalBounds classical_bounds(const SparseSystem& sys) {
  sys.validate();
  ClassicalBounds out;
  const long n = sys.num_vars, s = sys.s(), p = sys.p();
  const long d = max_total_degree(sys);
  out.degree = d;
  if (s > 0) {
    const BigInt sd = BigInt(s) * d;
    out.milnor_thom = (sd + 1) * pow_int(BigInt(2 * sd + 1), n);
  } else {
    out.milnor_thom = BigInt(d) * pow_int(BigInt(2 * d - 1 < 0 ? 0 : 2 * d - 1), n);
  }
  out.basu_form = pow_int(BigInt(p + s), n) * pow_int(BigInt(d), n);
  return out;
}

std::string_view key(BoundKind kind) {
  switch (kind) {
    case BoundKind::MainTheorem: return "main_thm_1";
    case BoundKind::LemmaCompact: return "lemma_compact";
    case BoundKind::LemmaVariety: return "lemma_variety";
    case BoundKind::KnomialSmooth: return "cor_knomial_smooth";
    case BoundKind::KnomialVariety: return "cor_knomial_variety";
    case BoundKind::KnomialSemialgebraic: return "thm_knomial_semialgebraic";
    case BoundKind::ClassicalMilnorThom: return "classical_milnor_thom";
    case BoundKind::ClassicalBasuForm: return "classical_basu_form";
  }
  return "unknown";
}

const BoundEntry& BoundReport::at(BoundKind kind) const {
  for (const auto& e : entries)
    if (e.kind == kind) return e;
  throw Error(ErrorCode::DomainError, "bound not present in report");
}

BoundReport compare_bounds(const SparseSystem& sys) {
  sys.validate();
  BoundReport r;
  r.n = sys.num_vars;
  r.p = sys.p();
  r.s = sys.s();
  r.k = monomial_count(sys);
  r.degree = max_total_degree(sys);
  r.volume_q = support_hull(sys).normalized_volume();

  const bool single_equation = r.p == 1 && r.s == 0;
  const bool equations_only = r.s == 0;

  r.entries.push_back({BoundKind::MainTheorem, component_bound(sys), true, false, ""});

  {
    BoundEntry e{BoundKind::LemmaCompact, 0, single_equation, true,
                 "requires a compact zero set with no isolated points"};
    if (single_equation) {
      e.value = compact_hypersurface_bound(sys.equations.front());
      if (e.value == 0) e.note += "; degenerate support polytope";
    } else {
      e.note = "needs exactly one equation and no inequalities";
    }
    r.entries.push_back(std::move(e));
  }
  {
    BoundEntry e{BoundKind::LemmaVariety, 0, equations_only, false, ""};
    if (equations_only) e.value = variety_bound(sys);
    else e.note = "needs s = 0";
    r.entries.push_back(std::move(e));
  }
  {
    BoundEntry e{BoundKind::KnomialSmooth, 0, single_equation, true,
                 "requires a smooth compact hypersurface"};
    if (single_equation) e.value = Rational(smooth_knomial_bound(r.n, r.k));
    r.entries.push_back(std::move(e));
  }
  {
    BoundEntry e{BoundKind::KnomialVariety, 0, equations_only, false, ""};
    if (equations_only) e.value = Rational(variety_knomial_bound(r.n, r.k));
    else e.note = "needs s = 0";
    r.entries.push_back(std::move(e));
  }
  r.entries.push_back({BoundKind::KnomialSemialgebraic,
                       Rational(semialgebraic_knomial_bound(r.n, r.s, r.k)), true,
                       false, ""});
  const auto classical = classical_bounds(sys);
  r.entries.push_back({BoundKind::ClassicalMilnorThom, Rational(classical.milnor_thom),
                       true, false, ""});
  r.entries.push_back({BoundKind::ClassicalBasuForm, Rational(classical.basu_form), true,
                       true, "constant not specified in the source bound; taken as 1"});

  const BoundEntry* best = nullptr;
  for (const auto& e : r.entries) {
    if (!e.applicable || e.conditional) continue;
    if (!best || e.value < best->value) best = &e;
  }
  r.smallest = best->kind;
  return r;
}

}  // namespace fewnomial
