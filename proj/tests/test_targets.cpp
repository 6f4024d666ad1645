#include <cmath>

#include <doctest.h>

#include "rbfadapt/targets.hpp"

using namespace rbfadapt;

namespace {

double at(TargetId id, double x, double y = 0.0) { return eval_target(id, {x, y}); }

}  // namespace

TEST_CASE("pinned values") {
  CHECK(at(TargetId::F1, 0.0) == 1.0);
  CHECK(at(TargetId::F1, 0.2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(at(TargetId::F1, 1.0) == doctest::Approx(1.0 / 26.0).epsilon(1e-15));

  CHECK(at(TargetId::F2, 0.0) == doctest::Approx(-0.00999966667999946).epsilon(1e-14));
  CHECK(at(TargetId::F2, 0.3) == doctest::Approx(0.9999999999999996).epsilon(1e-15));

  CHECK(at(TargetId::F3, 0.0) == doctest::Approx(0.01124650700329401).epsilon(1e-13));
  // (x+1)^2 = 3 makes the cosine argument vanish: the global maximum 3/8.
  CHECK(at(TargetId::F3, std::sqrt(3.0) - 1.0) == doctest::Approx(0.375).epsilon(1e-13));

  CHECK(at(TargetId::F4, 0.0, 0.0) == doctest::Approx(1.1318819964960685).epsilon(1e-14));
  CHECK(at(TargetId::F4, 0.5, 0.5) == doctest::Approx(1.951229538205811).epsilon(1e-14));

  CHECK(at(TargetId::F5, 0.0, 0.0) == 0.6);
  CHECK(at(TargetId::F5, 0.1, -0.5) == doctest::Approx(0.9046376623823059).epsilon(1e-14));

  CHECK(at(TargetId::F6, 0.35, 0.25) == 1.2);
  CHECK(at(TargetId::F6, 0.0, 0.0) == doctest::Approx(0.20001511232381985).epsilon(1e-14));
}

TEST_CASE("ranges on a dense grid") {
  for (int i = 0; i <= 400; ++i) {
    const double x = -1.0 + 2.0 * i / 400.0;
    const double v1 = at(TargetId::F1, x);
    CHECK(v1 > 0.0);
    CHECK(v1 <= 1.0);
    // tanh saturates to exactly 1.0 in double well inside the domain.
    CHECK(std::abs(at(TargetId::F2, x)) <= 1.0);
    const double v3 = at(TargetId::F3, x);
    CHECK(v3 >= 0.0);
    CHECK(v3 <= 0.375);
  }
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double x = -1.0 + 2.0 * i / 40.0;
      const double y = -1.0 + 2.0 * j / 40.0;
      const double v4 = at(TargetId::F4, x, y);
      CHECK(v4 > 0.0);
      CHECK(v4 < 4.0);
      const double v5 = at(TargetId::F5, x, y);
      CHECK(v5 >= 0.2 - 1e-15);
      CHECK(v5 <= 1.0 + 1e-15);
      const double v6 = at(TargetId::F6, x, y);
      CHECK(v6 >= 0.2);
      CHECK(v6 <= 1.2);
    }
  }
}

TEST_CASE("domain is strict") {
  CHECK_NOTHROW(at(TargetId::F1, 1.0));
  CHECK_NOTHROW(at(TargetId::F1, -1.0));
  CHECK_THROWS_AS(at(TargetId::F1, 1.0 + 1e-12), OutOfDomain);
  CHECK_THROWS_AS(at(TargetId::F1, -1.0 - 1e-12), OutOfDomain);
  // 1D targets ignore the y coordinate entirely.
  CHECK_NOTHROW(at(TargetId::F2, 0.0, 5.0));
  CHECK_THROWS_AS(at(TargetId::F5, 0.0, 1.5), OutOfDomain);
  CHECK_THROWS_AS(at(TargetId::F5, -1.5, 0.0), OutOfDomain);
  CHECK_NOTHROW(at(TargetId::F5, 1.0, -1.0));
}

TEST_CASE("ids, names, dimensions") {
  const TargetId ids[] = {TargetId::F1, TargetId::F2, TargetId::F3,
                          TargetId::F4, TargetId::F5, TargetId::F6};
  for (TargetId id : ids) CHECK(parse_target(target_name(id)) == id);
  CHECK_THROWS_AS(parse_target("f7"), ConfigError);
  CHECK_THROWS_AS(parse_target("F1"), ConfigError);

  CHECK(target_dimension(TargetId::F1) == 1);
  CHECK(target_dimension(TargetId::F2) == 1);
  CHECK(target_dimension(TargetId::F3) == 1);
  CHECK(target_dimension(TargetId::F4) == 2);
  CHECK(target_dimension(TargetId::F5) == 2);
  CHECK(target_dimension(TargetId::F6) == 2);

  const auto [a, b] = target_domain(TargetId::F4);
  CHECK(a == -1.0);
  CHECK(b == 1.0);
}
