#include "doctest.h"
#include "fewnomial/polytope.hpp"
#include "oracles.hpp"

#include <random>

using namespace fewnomial;

namespace {

Point pt(std::initializer_list<long> c) {
  Point p(static_cast<Index>(c.size()));
  Index i = 0;
  for (long v : c) p(i++) = v;
  return p;
}

std::vector<Point> pts(std::initializer_list<std::initializer_list<long>> list) {
  std::vector<Point> out;
  for (auto c : list) out.push_back(pt(c));
  return out;
}

// Laplace expansion over longs; independent of the library's elimination.
long laplace_det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * laplace_det(minor);
  }
  return det;
}

}  // namespace

TEST_CASE("hull of the BLR (A) support keeps only the triangle corners") {
  auto p = convex_hull(pts({{0, 0}, {1, 0}, {0, 1}, {5, 0}, {0, 3}}), 2);
  CHECK(p.vertices() == pts({{0, 0}, {0, 3}, {5, 0}}));
  CHECK(normalized_volume(p) == 15);
}

TEST_CASE("degenerate hulls") {
  auto point = convex_hull(pts({{0, 0}}), 2);
  CHECK(point.vertices() == pts({{0, 0}}));
  CHECK(point.dimension() == 0);
  CHECK(normalized_volume(point) == 0);

  auto seg = convex_hull(pts({{0, 0}, {1, 1}, {2, 2}}), 2);
  CHECK(seg.vertices() == pts({{0, 0}, {2, 2}}));
  CHECK(seg.dimension() == 1);
  CHECK(normalized_volume(seg) == 0);
  CHECK(seg.contains(pt({1, 1})));
  CHECK_FALSE(seg.contains(pt({1, 0})));
  CHECK_FALSE(seg.contains(pt({3, 3})));

  // A triangle floating in R^3.
  auto tri = convex_hull(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}), 3);
  CHECK(tri.dimension() == 2);
  CHECK(tri.vertices().size() == 4);
  CHECK(normalized_volume(tri) == 0);
  Point centroid(3);
  centroid << Rational(1, 3), Rational(1, 3), Rational(1, 3);
  CHECK(tri.contains(centroid));
}

TEST_CASE("dimension mismatch is reported") {
  CHECK_THROWS_AS(convex_hull(pts({{0, 0}, {1, 0, 0}}), 2), Error);
  auto sq = convex_hull(pts({{0, 0}, {1, 1}}), 2);
  CHECK_THROWS_AS(sq.contains(pt({1})), Error);
  CHECK_THROWS_AS(minkowski_sum(sq, standard_simplex(3)), Error);
}

TEST_CASE("standard simplex has normalized volume one") {
  for (Index n = 1; n <= 6; ++n) CHECK(normalized_volume(standard_simplex(n)) == 1);
}

TEST_CASE("Spikes polytope matches the two-determinant oracle") {
  // Q = conv{O, e_1..e_n, (D,..,D)}; split into conv{O, e_i} and
  // conv{e_i, (D,..,D)} and take the two determinants independently.
  for (long n = 2; n <= 4; ++n) {
    for (long D : {1L, 5L, 20L}) {
      std::vector<Point> g;
      g.push_back(Point::Zero(n));
      for (long i = 0; i < n; ++i) g.push_back(Point::Unit(n, i));
      for (long j = 1; j <= D; ++j) g.push_back(Point::Constant(n, Rational(j)));
      std::vector<std::vector<long>> m(n, std::vector<long>(n));
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) m[r][c] = (r == c ? 1 : 0) - D;
      const long expected = 1 + std::labs(laplace_det(m));
      CHECK(expected == n * D);
      CHECK(normalized_volume(convex_hull(g, n)) == expected);
    }
  }
}

TEST_CASE("Minkowski sums") {
  auto a = convex_hull(pts({{0, 0}, {1, 0}}), 2);
  auto b = convex_hull(pts({{0, 0}, {0, 1}}), 2);
  auto square = minkowski_sum(a, b);
  CHECK(square.vertices() == pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(normalized_volume(square) == 2);

  auto tri = standard_simplex(2);
  auto moved = minkowski_sum(tri, convex_hull(pts({{3, -2}}), 2));
  CHECK(moved.vertices() == pts({{3, -2}, {3, -1}, {4, -2}}));

  auto twice = minkowski_sum(tri, tri);
  CHECK(twice.vertices() == pts({{0, 0}, {0, 2}, {2, 0}}));
  CHECK(normalized_volume(twice) == 4);
}

TEST_CASE("scaling") {
  auto tri = standard_simplex(2);
  auto big = scale(tri, 3);
  CHECK(big.vertices() == pts({{0, 0}, {0, 3}, {3, 0}}));
  CHECK(normalized_volume(big) == 9);
  CHECK(scale(tri, 1) == tri);
  auto origin = scale(tri, 0);
  CHECK(origin.vertices() == pts({{0, 0}}));
  CHECK_THROWS_AS(scale(tri, -1), Error);
}

TEST_CASE("membership is exact") {
  auto tri = standard_simplex(2);
  Point third(2);
  third << Rational(1, 3), Rational(1, 3);
  CHECK(tri.contains(third));
  CHECK_FALSE(tri.contains(pt({1, 1})));
  Point edge(2);
  edge << Rational(1, 2), Rational(1, 2);
  CHECK(tri.contains(edge));
  Point just_out(2);
  just_out << Rational(1, 2), Rational(1, 2) + Rational(1, 1000000);
  CHECK_FALSE(tri.contains(just_out));
  for (const auto& v : tri.vertices()) CHECK(tri.contains(v));
}

TEST_CASE("properties on random configurations") {
  std::mt19937 rng(20260418);
  std::uniform_int_distribution<long> coord(0, 10);
  std::uniform_int_distribution<int> count(1, 12);

  SUBCASE("two-dimensional volume equals the shoelace oracle") {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<oracle::P2> raw;
      std::vector<Point> g;
      const int m = count(rng);
      for (int i = 0; i < m; ++i) {
        oracle::P2 q{coord(rng), coord(rng)};
        raw.push_back(q);
        g.push_back(pt({q[0], q[1]}));
      }
      const auto hull = oracle::gift_wrap(raw);
      auto p = convex_hull(g, 2);
      CHECK(normalized_volume(p) == oracle::shoelace_twice_area(hull));
      if (hull.size() >= 3) CHECK(p.vertices().size() == hull.size());
    }
  }

  SUBCASE("three-dimensional volume equals brute-force tetrahedra") {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<oracle::P3> raw;
      std::vector<Point> g;
      const int m = count(rng);
      for (int i = 0; i < m; ++i) {
        oracle::P3 q{coord(rng), coord(rng), coord(rng)};
        raw.push_back(q);
        g.push_back(pt({q[0], q[1], q[2]}));
      }
      CHECK(normalized_volume(convex_hull(g, 3)) == oracle::brute_force_volume3(raw));
    }
  }

  SUBCASE("permutation, duplication, dilation and monotonicity") {
    for (int trial = 0; trial < 40; ++trial) {
      const Index n = 2 + trial % 3;
      std::vector<Point> g;
      for (int i = 0; i < 4 + trial % 6; ++i) {
        Point q(n);
        for (Index j = 0; j < n; ++j) q(j) = coord(rng);
        g.push_back(q);
      }
      auto p = convex_hull(g, n);

      auto shuffled = g;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(g.front());
      shuffled.push_back(g.back());
      auto p2 = convex_hull(shuffled, n);
      CHECK(p2 == p);
      CHECK(normalized_volume(p2) == normalized_volume(p));

      const Rational s(1 + trial % 4, 1 + trial % 3);
      CHECK(normalized_volume(scale(p, s)) ==
            normalized_volume(p) * pow_int(s, static_cast<long>(n)));

      // Adding a point can only grow the hull.
      auto grown = g;
      Point extra(n);
      for (Index j = 0; j < n; ++j) extra(j) = coord(rng);
      grown.push_back(extra);
      auto big = convex_hull(grown, n);
      for (const auto& v : p.vertices()) CHECK(big.contains(v));
      CHECK(normalized_volume(p) <= normalized_volume(big));
      for (const auto& x : g) CHECK(p.contains(x));
    }
  }
}

TEST_CASE("six-dimensional cube") {
  std::vector<Point> g;
  for (int mask = 0; mask < 64; ++mask) {
    Point q(6);
    for (int j = 0; j < 6; ++j) q(j) = (mask >> j) & 1;
    g.push_back(q);
  }
  auto cube = convex_hull(g, 6);
  CHECK(cube.vertices().size() == 64);
  CHECK(cube.facets().size() == 12);
  CHECK(normalized_volume(cube) == 720);
}
