#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rplane/errors.hpp"
#include "rplane/gaussian.hpp"

using namespace rplane;
using rplane::testing::integrate_numeric;
using rplane::testing::quadrature_oracle;
using rplane::testing::rel_err;
using rplane::testing::Sampler;

TEST_CASE("gauss_base closed forms") {
  CHECK(std::abs(gauss_base(kI, {}) - 1.0) < 1e-15);
  CHECK(std::abs(gauss_base(2.0 * kI, {}) - 0.5) < 1e-15);
  CHECK(std::abs(gauss_base(kI, {1.0, 0.0}) - std::exp(-kPi)) < 1e-15);
  CHECK_THROWS_AS(gauss_base(cplx(1.0, 0.0), {}), DomainError);
  CHECK_THROWS_AS(gauss_base(cplx(0.5, -0.1), {}), DomainError);
}

TEST_CASE("gauss_moment low-degree values") {
  CHECK(std::abs(gauss_moment(Poly2::constant(1.0), cplx(0.3, 1.1), {0.2, -0.4}) -
                 gauss_base(cplx(0.3, 1.1), {0.2, -0.4})) < 1e-15);
  const Poly2 r2 = poly_x1() * poly_x1() + poly_x2() * poly_x2();
  CHECK(std::abs(gauss_moment(r2, kI, {}) - 1.0 / kPi) < 1e-15);
  CHECK(std::abs(gauss_moment(poly_x1(), kI, {})) < 1e-17);
  CHECK(std::abs(gauss_moment(poly_x1() * poly_x1(), kI, {}) - 1.0 / (2.0 * kPi)) < 1e-15);
}

TEST_CASE("quadrature oracle sanity") {
  const auto g = quadrature_oracle([](const RVec2& x) { return std::exp(-kPi * (x[0] * x[0] + x[1] * x[1])); }, 6.0, 400);
  CHECK(std::abs(g.value - 1.0) < 1e-10);
  const cplx z(0.5, 1.0);
  const auto c = quadrature_oracle(
      [&](const RVec2& x) { return std::exp(kI * kPi * z * (x[0] * x[0] + x[1] * x[1])); }, 8.0, 800);
  CHECK(std::abs(c.value - gauss_base(z, {})) < 1e-8);
}

TEST_CASE("gauss_moment agrees with quadrature on random atoms") {
  Sampler rng(11);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    GaussAtom a = rng.atom(6, 0.2, 3.0, 3.0);
    a.coeff = 1.0;
    // a real wave keeps the integrand bounded by the Gaussian envelope
    const TestFunction h{a};
    const cplx exact = gauss_moment(a.poly, a.zpar, a.wave);
    const int steps = a.zpar.imag() < 0.5 ? 1200 : 600;
    const auto num = integrate_numeric(h, steps);
    worst = std::max(worst, std::abs(exact - num.value) / (1.0 + std::abs(exact)));
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("cartesian and (u, v) moments coincide") {
  Sampler rng(12);
  for (int t = 0; t < 50; ++t) {
    const GaussAtom a = rng.atom(7, 0.3, 2.0, 1.0);
    const cplx x = gauss_moment(a.poly, a.zpar, a.wave);
    const cplx y = gauss_moment_uv(to_uv(a.poly), a.zpar, a.wave);
    CHECK(rel_err(x, y) < 1e-11);
  }
}

TEST_CASE("gauss_moment linearity and scaling law") {
  Sampler rng(13);
  const cplx z(0.2, 0.9);
  const CVec2 w{0.3, -0.2};
  const Poly2 p = rng.poly(4), q = rng.poly(3);
  const cplx s(1.5, -0.5);
  CHECK(rel_err(gauss_moment(p + q, z, w), gauss_moment(p, z, w) + gauss_moment(q, z, w)) < 1e-14);
  CHECK(rel_err(gauss_moment(p * s, z, w), s * gauss_moment(p, z, w)) < 1e-14);
  const double lam = 1.7;
  const cplx lhs = lam * lam * gauss_moment(p.scaled(lam, lam), lam * lam * z, {lam * w[0], lam * w[1]});
  CHECK(rel_err(lhs, gauss_moment(p, z, w)) < 1e-12);
}

TEST_CASE("polynomial basis change round trip") {
  Sampler rng(14);
  const Poly2 p = rng.poly(6);
  const Poly2 back = from_uv(to_uv(p));
  for (const auto& [k, c] : p.terms()) CHECK(std::abs(back.coeff(k.first, k.second) - c) < 1e-12);
  CHECK(to_uv(holomorphic_power(5)).terms().size() == 1);
  CHECK(std::abs(to_uv(holomorphic_power(5)).coeff(5, 0) - 1.0) < 1e-14);
}

TEST_CASE("BiPolynomial bookkeeping") {
  Poly2 p = Poly2::monomial(2, 1, 3.0);
  CHECK(p.degree() == 3);
  p -= Poly2::monomial(2, 1, 3.0);
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  const Poly2 d = (poly_x1() * poly_x1() * poly_x2()).derivative(0);
  CHECK(d == Poly2::monomial(1, 1, 2.0));
  CHECK(eval_at(holomorphic_power(2), {1.0, 1.0}) == cplx(0.0, 2.0));
}

TEST_CASE("test function operations act pointwise") {
  Sampler rng(15);
  const TestFunction h = rng.test_function(2, 3);
  const RVec2 x{0.4, -0.3};
  const double r2 = x[0] * x[0] + x[1] * x[1];
  CHECK(rel_err(multiply_chirp(h, 0.7).value(x), h.value(x) * std::exp(kI * kPi * 0.7 * r2)) < 1e-13);
  const CVec2 v{0.2, cplx(0.1, 0.05)};
  CHECK(rel_err(multiply_wave(h, v).value(x), h.value(x) * std::exp(2.0 * kPi * kI * (v[0] * x[0] + v[1] * x[1]))) < 1e-13);
  CHECK(rel_err(dilate(h, -1.3).value(x), h.value({-1.3 * x[0], -1.3 * x[1]})) < 1e-13);
  const Poly2 p = rng.poly(2);
  CHECK(rel_err(multiply_poly(h, p).value(x), h.value(x) * eval_at(p, x)) < 1e-13);
  const TestFunction g = rng.test_function(1, 2);
  CHECK(rel_err(multiply(h, g).value(x), h.value(x) * g.value(x)) < 1e-13);
  for (int var = 0; var < 2; ++var) {
    const double eps = 1e-5;
    RVec2 xp = x, xm = x;
    xp[var] += eps;
    xm[var] -= eps;
    const cplx fd = (h.value(xp) - h.value(xm)) / (2 * eps);
    CHECK(rel_err(partial_derivative(h, var).value(x), fd) < 1e-8);
  }
}

TEST_CASE("pairing is the integral of the product") {
  Sampler rng(16);
  const TestFunction f = rng.test_function(1, 2), g = rng.test_function(2, 1);
  const auto num = integrate_numeric(multiply(f, g), 800);
  CHECK(std::abs(pair(f, g) - num.value) < 1e-9 * (1.0 + std::abs(num.value)));
  CHECK(rel_err(integrate(f + g), integrate(f) + integrate(g)) < 1e-14);
}

TEST_CASE("atoms reject Im(zpar) <= 0") {
  GaussAtom a;
  a.zpar = cplx(1.0, 0.0);
  CHECK_THROWS_AS(a.validate(), DomainError);
  CHECK_THROWS_AS(TestFunction{a}, DomainError);
  CHECK(TestFunction().empty());
  CHECK(TestFunction().value({1.0, 2.0}) == cplx{});
}
