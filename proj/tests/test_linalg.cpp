#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "rbfadapt/linalg.hpp"

using namespace rbfadapt;

namespace {

SymMatrix mat2(double a00, double a01, double a11) {
  SymMatrix a(2);
  a.set(0, 0, a00);
  a.set(0, 1, a01);
  a.set(1, 1, a11);
  return a;
}

}  // namespace

TEST_CASE("cholesky factors a 2x2 by hand") {
  // [[4,2],[2,3]] = L L^T with L = [[2,0],[1,sqrt(2)]].
  const SymMatrix a = mat2(4.0, 2.0, 3.0);
  const CholeskyFactor f = cholesky(a);
  CHECK(f.entry(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(f.entry(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.entry(1, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const std::vector<double> x = f.solve(std::vector<double>{8.0, 7.0});
  CHECK(x[0] == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.5).epsilon(1e-14));

  CHECK(f.log_det() == doctest::Approx(std::log(8.0)).epsilon(1e-14));
}

TEST_CASE("cholesky rejects an indefinite matrix") {
  // Eigenvalues 3 and -1.
  const SymMatrix a = mat2(1.0, 2.0, 1.0);
  CHECK(!try_cholesky(a).has_value());
  CHECK_THROWS_AS(cholesky(a), NotPositiveDefinite);
  try {
    cholesky(a);
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.pivot_index() == 1);
  }
}

TEST_CASE("log_det on diagonal and identity") {
  SymMatrix d(2);
  d.set(0, 0, 4.0);
  d.set(1, 1, 9.0);
  CHECK(cholesky(d).log_det() == doctest::Approx(std::log(36.0)).epsilon(1e-14));
  CHECK(cholesky(SymMatrix::identity(5)).log_det() == 0.0);
}

TEST_CASE("log_det matches LU on random SPD matrices") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<double> eigs(n);
    for (double& e : eigs) e = u(rng);
    const SymMatrix a = oracles::spd_with_spectrum(eigs, rng());
    const CholeskyFactor f = cholesky(a);
    CHECK(f.log_det() == doctest::Approx(oracles::lu_log_det(a)).epsilon(1e-10));
  }
}

TEST_CASE("solve matches Gauss-Jordan and has small residual") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    // Condition number capped at 1e4 so both routes stay accurate.
    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = std::pow(10.0, -4.0 * i / std::max(1, n - 1));
    const SymMatrix a = oracles::spd_with_spectrum(eigs, 1000 + trial);
    std::vector<double> b(n);
    for (double& v : b) v = u(rng);

    const std::vector<double> x = cholesky(a).solve(b);
    const std::vector<double> x_ref = oracles::gauss_jordan_solve(a, b);
    for (int i = 0; i < n; ++i)
      CHECK(x[i] == doctest::Approx(x_ref[i]).epsilon(1e-8));

    // Residual of the returned solution.
    for (int i = 0; i < n; ++i) {
      double r = -b[i];
      for (int j = 0; j < n; ++j) r += a(i, j) * x[j];
      CHECK(std::abs(r) < 1e-9);
    }
  }
}

TEST_CASE("solve rejects a wrong-sized right-hand side") {
  const CholeskyFactor f = cholesky(SymMatrix::identity(3));
  CHECK_THROWS_AS(f.solve(std::vector<double>{1.0, 2.0}), DimensionMismatch);
}

TEST_CASE("eigenvalues of fixed small matrices") {
  SUBCASE("1x1") {
    SymMatrix a(1);
    a.set(0, 0, 5.0);
    const std::vector<double> ev = symmetric_eigenvalues(a);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0] == 5.0);
  }
  SUBCASE("2x2 with known spectrum") {
    // [[1,2],[2,1]] has eigenvalues -1 and 3.
    const SymMatrix a = mat2(1.0, 2.0, 1.0);
    const std::vector<double> ev = symmetric_eigenvalues(a);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("diagonal") {
    SymMatrix a(3);
    a.set(0, 0, 3.0);
    a.set(1, 1, 1.0);
    a.set(2, 2, 2.0);
    const std::vector<double> ev = symmetric_eigenvalues(a);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ev[2] == doctest::Approx(3.0).epsilon(1e-14));
  }
}

TEST_CASE("eigenvalues recover a planted spectrum") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = 0.5 + i * 1.75;
    const SymMatrix a = oracles::spd_with_spectrum(eigs, 500 + trial);
    const std::vector<double> ev = symmetric_eigenvalues(a);
    REQUIRE(ev.size() == eigs.size());
    for (int i = 0; i < n; ++i)
      CHECK(ev[i] == doctest::Approx(eigs[i]).epsilon(1e-11));
  }
}

TEST_CASE("condition_number") {
  CHECK(condition_number(SymMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-13));

  SymMatrix d(2);
  d.set(0, 0, 2.0);
  d.set(1, 1, 1.0);
  CHECK(condition_number(d) == doctest::Approx(2.0).epsilon(1e-13));

  const SymMatrix a = oracles::spd_with_spectrum({1e-3, 0.5, 2.0, 50.0}, 1234);
  CHECK(condition_number(a) == doctest::Approx(5e4).epsilon(1e-9));

  // Indefinite input is a contract violation, not a huge number.
  CHECK_THROWS_AS(condition_number(mat2(1.0, 2.0, 1.0)), NotPositiveDefinite);
}

TEST_CASE("near-singular SPD matrix fails the pivot threshold") {
  // Rank-1 Gram matrix plus a perturbation far below the pivot cutoff.
  const int n = 3;
  SymMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a.set(i, j, 1.0 + (i == j ? 1e-18 : 0.0));
  CHECK(!try_cholesky(a).has_value());
}
