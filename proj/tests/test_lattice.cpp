#include "doctest.h"
#include "fewnomial/lattice.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace fewnomial;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, Index n, long bound) {
  std::uniform_int_distribution<long> e(-bound, bound);
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = e(rng);
  return m;
}

// Cofactor expansion on machine integers; independent of the Bareiss path.
long laplace(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * laplace(minor);
  }
  return det;
}

std::vector<std::vector<long>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<long>> out(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).convert_to<long>());
  return out;
}

void check_invariants(const IntMatrix& A) {
  const auto s = smith_normal_form(A);
  const Index n = A.rows();
  CHECK(IntMatrix(s.U * A * s.V) == s.D);
  CHECK(mp::abs(determinant(s.U)) == 1);
  CHECK(mp::abs(determinant(s.V)) == 1);
  BigInt prod = 1;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (Index i = 0; i < n; ++i) {
    CHECK(s.D(i, i) >= 0);
    if (i + 1 < n) {
      if (s.D(i, i) == 0) CHECK(s.D(i + 1, i + 1) == 0);
      else CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    }
    prod *= s.D(i, i);
  }
  CHECK(prod == mp::abs(determinant(A)));
}

}  // namespace

TEST_CASE("quoted examples") {
  auto a = smith_normal_form(mat({{2, 0}, {0, 3}}));
  CHECK(a.D == mat({{1, 0}, {0, 6}}));
  auto id = smith_normal_form(IntMatrix(IntMatrix::Identity(3, 3)));
  CHECK(id.U == IntMatrix::Identity(3, 3));
  CHECK(id.V == IntMatrix::Identity(3, 3));
  CHECK(id.D == IntMatrix::Identity(3, 3));
  CHECK(smith_normal_form(mat({{4, 0}, {0, 6}})).D == mat({{2, 0}, {0, 12}}));
  CHECK_THROWS_AS(smith_normal_form(IntMatrix(2, 3)), Error);
}

TEST_CASE("determinant") {
  CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(IntMatrix(IntMatrix::Identity(4, 4))) == 1);
  CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(3, 2)), Error);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + trial % 6, 20);
    CHECK(determinant(m) == laplace(to_rows(m)));
  }
}

TEST_CASE("entry size") {
  CHECK(entry_size(IntMatrix(IntMatrix::Zero(2, 2))) == doctest::Approx(std::log(4.0)));
  CHECK(entry_size(mat({{12, -3}, {0, 1}})) == doctest::Approx(std::log(16.0)));
  IntMatrix m = IntMatrix::Zero(3, 3);
  m(1, 2) = -100;
  CHECK(entry_size(m) == doctest::Approx(std::log(106.0)));
  IntMatrix huge = IntMatrix::Zero(2, 2);
  huge(0, 0) = pow_int(BigInt(10), 400);
  CHECK(entry_size(huge) == doctest::Approx(400 * std::log(10.0)));
}

TEST_CASE("2x2 closed form") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> e(-50, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    const long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    const auto s = smith_normal_form(mat({{a, b}, {c, d}}));
    const auto want = oracle::snf_2x2(a, b, c, d);
    CHECK(s.D(0, 0) == want[0]);
    CHECK(s.D(1, 1) == want[1]);
  }
}

TEST_CASE("invariants on random matrices") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) check_invariants(random_matrix(rng, 1 + trial % 6, 50));
  // Singular and structured inputs.
  check_invariants(mat({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}));
  check_invariants(IntMatrix(IntMatrix::Zero(3, 3)));
  check_invariants(mat({{6, 10, 15}, {0, 0, 0}, {10, 15, 6}}));
}

TEST_CASE("deterministic output and size report") {
  const IntMatrix A = mat({{3, 5, 7}, {2, 9, 4}, {8, 1, 6}});
  const auto a = smith_normal_form(A), b = smith_normal_form(A);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
  CHECK(a.h_A == doctest::Approx(std::log(15.0)));
  CHECK(a.h_reference == doctest::Approx(27 * std::pow(std::log(15.0) + std::log(3.0), 2)));
  CHECK(a.h_U >= std::log(6.0));
}

TEST_CASE("machine integer scalar") {
  Matrix<long> m(2, 2);
  m << 4, 6, 6, 4;
  const auto s = smith_normal_form(m);
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 10);
  CHECK(Matrix<long>(s.U * m * s.V) == s.D);
  CHECK(determinant(m) == -20);
}
