#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rplane/errors.hpp"
#include "rplane/plane_rep.hpp"
#include "rplane/scans.hpp"

using namespace rplane;
using rplane::testing::rel_err;
using rplane::testing::Sampler;

TEST_CASE("pairing basics") {
  const TestFunction g = TestFunction::standard_gaussian();
  CHECK(std::abs(pairing_iac(1, 0, 1, 1.0, 0, g) - std::exp(-2 * kPi)) < 1e-16);
  CHECK(rising_factorial(4.0, 3) == 120.0);
  CHECK(rising_factorial(2.5, 0) == 1.0);
  CHECK(bound_weight(1, 1, 1.0, 0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(bound_weight(3, 4, 2.0, 2) == doctest::Approx(0.2 / (1 + 9 / 4.0 + 64)));
  CHECK_THROWS_AS(pairing_iac(0, 1, 1, 1.0, 1, g, PairingRoute::B2), DomainError);
  CHECK_THROWS_AS(pairing_iac(1, 0, 1, 1.0, 1, g, PairingRoute::D2), DomainError);
}

TEST_CASE("first-order routes agree") {
  Sampler rng(71);
  const TestFunction h = rng.test_function(2, 2);
  for (auto [a, c] : {std::pair{1, 1}, std::pair{2, -3}, std::pair{-5, 4}})
    for (double q : {0.5, 1.0, 2.0}) {
      const cplx main = pairing_iac(a, c, 1, q, 1, h);
      for (auto route : {PairingRoute::B2, PairingRoute::D2, PairingRoute::RotationMultiplier})
        CHECK(std::abs(pairing_iac(a, c, 1, q, 1, h, route) - main) <= 1e-9 * std::max(1.0, std::abs(main)));
    }
}

TEST_CASE("rotation generator does not commute with x2") {
  // [L, x2] f = -i x1 f, so a symbol-level replacement of L by x2 cannot hold beyond first order
  Sampler rng(72);
  const TestFunction f = rng.test_function(1, 2);
  const TestFunction lhs = infinitesimal(Infinitesimal::Rotation, multiply_poly(f, poly_x2())) -
                           multiply_poly(infinitesimal(Infinitesimal::Rotation, f), poly_x2());
  for (const RVec2& x : {RVec2{0.3, -0.2}, RVec2{1.1, 0.4}})
    CHECK(rel_err(lhs.value(x), -kI * x[0] * f.value(x)) < 1e-12);
}

TEST_CASE("rotation multiplier polynomial") {
  CHECK(rotation_multiplier(1.5, 0) == Poly2::constant(1.0));
  // for j = 1 the multiplier is -L applied to exp(2 i pi k x1), divided back out
  const Poly2 q1 = rotation_multiplier(1.5, 1);
  CHECK(q1.degree() == 1);
}

TEST_CASE("averaging decomposition") {
  Sampler rng(73);
  const TestFunction h = rng.test_function(1, 2);
  for (std::int64_t p : {2, 3})
    for (int r = 0; r <= 3; ++r) CHECK(averaging_residual(3.0, 2.0, p, r, 1.5, 1, h) < 1e-9);
  CHECK(averaging_residual(1.0, 0.0, 2, 0, 1.0, 1, h) == 0.0);
}

TEST_CASE("Poincare series by two routes") {
  const PoincareSeries s(11, 1, 25);
  for (cplx z : {cplx(0.1, 1.0), cplx(-0.3, 0.8)}) {
    const cplx direct = s.eval(z, 1);
    CHECK(rel_err(direct, s.eval_via_distributions(z, 1)) < 1e-10);
    CHECK(rel_err(direct, s.eval(z, 3)) < 1e-12);
    CHECK(s.eval(z, 2) == s.eval(z, 2));
    CHECK(direct == poincare_eval(11, 1, z, 25, 1));
  }
  // converges: doubling the cutoff moves the value much less than the first terms
  const cplx z(0.2, 1.0);
  const cplx a = poincare_eval(11, 1, z, 40), b = poincare_eval(11, 1, z, 80);
  CHECK(std::abs(a - b) < 1e-6 * std::abs(b));
  CHECK(std::abs(s.eval(z, 1, 10) - s.eval(z, 1)) > 0.0);
  CHECK(std::abs(theta_psi(11, 1, cplx(0, 1)) - (-kI * std::pow(2.0, 5.5) * std::exp(-2 * kPi))) < 1e-15);
}

TEST_CASE("Fourier estimates of the Poincare series") {
  const auto est = poincare_fourier(11, 1, 1.0, {1, 2}, 60, 32);
  REQUIRE(est.size() == 2);
  // weight 12 cusp space is one-dimensional: b_2 / b_1 = -24
  CHECK(std::abs(est[1].value / est[0].value - cplx(-24.0)) < 1e-3);
  CHECK(est[0].aliasing < 1e-6 * std::abs(est[0].value));
  CHECK_THROWS_AS(poincare_fourier(11, 1, 1.0, {1}, 60, 12), DomainError);
}

TEST_CASE("bound profile") {
  const TestFunction g = TestFunction::standard_gaussian();
  // max-norm 1 shell: (+-1, +-1), weight 2^{-1/2}
  const ShellProfile one = bound_profile(0, 1, 1.0, g, 2, 1);
  double expect = 0.0;
  for (int a : {-1, 1})
    for (int c : {-1, 1}) expect = std::max(expect, std::sqrt(2.0) * std::abs(pairing_iac(a, c, 1, 1.0, 0, g)));
  REQUIRE(one.max_ratio.size() == 2);
  CHECK(one.max_ratio[0] == doctest::Approx(expect).epsilon(1e-12));
  CHECK_THROWS_AS(bound_profile(0, 1, 1.0, g, 1, 1), DomainError);
  const ShellProfile prof = bound_profile(3, 1, 1.0, g, 40, 2);
  CHECK(prof.norms.size() == 40);
  CHECK(prof.finite);
  const ShellProfile again = bound_profile(3, 1, 1.0, g, 40, 1);
  CHECK(again.max_ratio == prof.max_ratio);
  CHECK(loglog_slope({1, 2, 4}, {3, 6, 12}) == doctest::Approx(1.0));
  CHECK(loglog_slope({1, 2}, {0, 0}) == 0.0);
}

TEST_CASE("growth rows") {
  const TestFunction h = growth_default_test(11);
  GrowthConfig cfg;
  cfg.n_max = 1;
  cfg.cutoff = 12;
  const auto rows = growth_rows(cfg, h);
  REQUIRE(rows.size() == 2);
  cplx direct{};
  for (const auto& pr : coprime_pairs(cfg.cutoff)) direct += pairing_iac(pr.a, pr.c, cfg.M, 1.0, cfg.j, h);
  CHECK(rel_err(rows[0].total, direct) < 1e-10);
  CHECK(rows[0].mass == "1");
  CHECK(rows[1].mass == "4");
  CHECK(rows[1].mass_ok);
  REQUIRE(rows[1].normalized.size() == 2);
  CHECK(rows[1].normalized[0] == doctest::Approx(std::abs(rows[1].total) / (4 * std::pow(4.0, 0.1))));

  cfg.max_terms = 10;
  CHECK_THROWS_AS(growth_rows(cfg, h), DomainError);
  cfg.p = 4;
  CHECK_THROWS_AS(growth_rows(cfg, h), DomainError);
}
