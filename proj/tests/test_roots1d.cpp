#include "doctest.h"
#include "fewnomial/roots1d.hpp"
#include "ksum_gen.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace fewnomial;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }
Rational r(const char* s) { return parse_rational(s); }

KSum binomial(long d, long c) { return KSum({{q(d), q(1)}, {q(0), q(-c)}}); }

SolveRequest request(KSum f, Rational R, Rational eps) {
  SolveRequest req;
  req.f = std::move(f);
  req.R = std::move(R);
  req.epsilon = std::move(eps);
  return req;
}

Real dec(const std::string& s, unsigned bits = 256) {
  Real x = real_zero(bits);
  mpfr_set_str(x.backend().data(), s.c_str(), 10, MPFR_RNDN);
  return x;
}

void check_contains(const RootApprox& a, const Real& truth, const Rational& eps) {
  CHECK(a.radius <= to_real(eps, 256));
  CHECK(mp::abs(with_precision(a.value, 512) - truth) <= with_precision(a.radius, 512));
}

}  // namespace

TEST_CASE("count_roots") {
  CHECK(count_roots(binomial(2, 4), 10) == 1);
  CHECK(count_roots(KSum({{q(2), q(1)}, {q(0), q(4)}}), 10) == 0);
  CHECK(count_roots(binomial(2, 4), 1) == 0);
  CHECK(count_roots(KSum({{q(1, 2), q(1)}, {q(0), q(-3)}}), 10) == 1);
  CHECK(count_roots(KSum({{q(1, 2), q(1)}, {q(0), q(-3)}}), 9) == 0);
  CHECK_THROWS_AS(count_roots(KSum({{q(3), q(1)}, {q(1), q(-2)}, {q(0), q(2)}}), 10), Error);
}

TEST_CASE("x^1000 - 2 against the exponential oracle") {
  const auto a = solve_one_alternation(request(binomial(1000, 2), 2, r("1e-12")));
  REQUIRE(a);
  check_contains(*a, dec(oracle::mpfr_root(2, 1000, 256, 60)), r("1e-12"));
  CHECK(to_string(a->value, 10).rfind("1.000693387", 0) == 0);
  CHECK(a->evaluations < 100);
  CHECK(a->evaluations <= evaluation_budget(binomial(1000, 2), 2, r("1e-12")));
}

TEST_CASE("linear sums land in O(1) Newton steps") {
  for (long c : {1L, 3L, 17L}) {
    const auto a = solve_one_alternation(request(binomial(1, c), 20, r("1e-9")));
    REQUIRE(a);
    CHECK(mp::abs(a->value - c) <= a->radius);
    CHECK(a->newton_steps <= 2);
  }
}

TEST_CASE("mixed-exponent example against a sign-scan oracle") {
  const Rational pi = r("3.14159265358979323846264338327950288");
  const KSum f({{r("2.53"), q(47)}, {r("0.9"), r("-10.3")}, {q(0), -pi},
                {q(-3), q(-10)}, {r("-5.5"), q(-1)}});
  oracle::PowerSum g{{{"2.53", "47"}, {"0.9", "-10.3"}, {"0", "-3.14159265358979323846264338327950288"},
                      {"-3", "-10"}, {"-5.5", "-1"}},
                     256};
  const auto flips = oracle::sign_scan(g, 10.0, 1000000);
  REQUIRE(flips.size() == 1);
  const Real truth = dec(g.bisect(flips[0].first, flips[0].second, 60));

  const auto a = solve_one_alternation(request(f, 10, r("1e-10")));
  REQUIRE(a);
  check_contains(*a, truth, r("1e-10"));
  CHECK(certify_sign_change(f, a->value, a->radius, 2 * a->precision_bits));
}

TEST_CASE("no root in the interval") {
  CHECK_FALSE(solve_one_alternation(request(binomial(2, 4), q(3, 2), r("1e-6"))));
  CHECK_FALSE(solve_one_alternation(request(KSum({{q(2), q(1)}, {q(0), q(4)}}), 5, r("1e-6"))));
  CHECK_THROWS_AS(solve_one_alternation(request(binomial(2, 4), 5, 6)), Error);
  CHECK_THROWS_AS(solve_one_alternation(request(binomial(2, 4), 5, 0)), Error);
}

TEST_CASE("roots below eps/2 are reported as zero") {
  const auto a = solve_one_alternation(request(KSum({{q(1), q(1)}, {q(0), r("1e-9")}}) , 1, r("1e-6")));
  CHECK_FALSE(a);
  const auto b = solve_one_alternation(request(KSum({{q(1), q(1)}, {q(0), r("-1e-9")}}), 1, r("1e-6")));
  REQUIRE(b);
  CHECK(b->near_zero);
  CHECK(b->value == 0);
  CHECK(b->radius == to_real(r("1e-6"), precision_bits(b->radius)));
}

TEST_CASE("negative-exponent and sign-flipped sums") {
  // 8 - x^3 has root 2; 1/x - 4 has root 1/4.
  const auto a = solve_one_alternation(request(KSum({{q(3), q(-1)}, {q(0), q(8)}}), 10, r("1e-15")));
  REQUIRE(a);
  check_contains(*a, to_real(2L, 256), r("1e-15"));
  const auto b = solve_one_alternation(request(KSum({{q(-1), q(1)}, {q(0), q(-4)}}), 10, r("1e-15")));
  REQUIRE(b);
  check_contains(*b, to_real(q(1, 4), 256), r("1e-15"));
}

TEST_CASE("planted roots are bracketed and certified") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> sp(6, 14);
  const Rational eps = r("1e-10");
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = testdata::planted_ksum(rng, q(sp(rng), 10));
    const auto a = solve_one_alternation(request(p.f, 10, eps));
    REQUIRE(a);
    check_contains(*a, to_real(p.root(), 512), eps);
    CHECK(certify_sign_change(p.f, a->value, a->radius, 2 * a->precision_bits));
  }
}

TEST_CASE("evaluation count grows with log d") {
  std::vector<int> counts;
  for (long d : {10L, 100L, 1000L, 10000L, 100000L}) {
    SolveRequest req = request(binomial(d, 2), 2, r("1e-12"));
    req.budget_check = true;
    const auto a = solve_one_alternation(req);
    REQUIRE(a);
    check_contains(*a, dec(oracle::mpfr_root(2, d, 256, 60)), r("1e-12"));
    counts.push_back(a->evaluations);
  }
  for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] - counts[i - 1] <= 12);
  CHECK(counts.back() < 80);
}

TEST_CASE("Newton corrections shrink quadratically") {
  // x^3 + x - 3 normalizes to y + 1 - 3 y^(-1/2), which is not linear.
  const auto a = solve_one_alternation(
      request(KSum({{q(3), q(1)}, {q(1), q(1)}, {q(0), q(-3)}}), 4, r("1e-40")));
  REQUIRE(a);
  const auto& c = a->newton_corrections;
  REQUIRE(c.size() >= 2);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i - 1] < 1e-3 && c[i] > 0) CHECK(c[i] <= 4 * c[i - 1] * c[i - 1] + 1e-45);
}

TEST_CASE("identical requests give identical output") {
  const auto req = request(KSum({{r("5/2"), q(3)}, {q(1), q(-1)}, {q(-2), q(-5)}}), 10, r("1e-20"));
  const auto a = solve_one_alternation(req), b = solve_one_alternation(req);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(to_string(a->value, 60) == to_string(b->value, 60));
  CHECK(to_string(a->radius, 60) == to_string(b->radius, 60));
  CHECK(a->evaluations == b->evaluations);
}

TEST_CASE("solve_binomial") {
  const Rational eps = r("1e-12");
  auto a = solve_binomial(2, 9, 10, eps);
  CHECK(mp::abs(a.value - 3) <= a.radius);
  auto b = solve_binomial(1000, 2, 2, eps);
  CHECK(mp::abs(with_precision(b.value, 512) - dec(oracle::mpfr_root(2, 1000, 256, 60))) <= b.radius);
  auto c = solve_binomial(-2, 4, 10, eps);
  CHECK(mp::abs(c.value - to_real(q(1, 2), 256)) <= c.radius);
  auto d = solve_binomial(q(5, 2), q(243, 32), 10, eps);  // (3/2)^(5/2)... squared: x = (243/32)^(2/5) = 9/4
  CHECK(mp::abs(d.value - to_real(q(9, 4), 256)) <= d.radius);
  for (const auto* x : {&a, &b, &c, &d}) CHECK(x->radius <= to_real(eps, 64));
  CHECK_THROWS_AS(solve_binomial(0, 2, 2, eps), Error);
  CHECK_THROWS_AS(solve_binomial(2, -1, 2, eps), Error);
}

TEST_CASE("default precision") {
  CHECK(default_precision_bits(1, pow_int(q(2), -20)) == 128);
  CHECK(default_precision_bits(2, r("1e-12")) == 164);
  CHECK(default_precision_bits(q(1), pow_int(q(2), -100)) == 400);
}
