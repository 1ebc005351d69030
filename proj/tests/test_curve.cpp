#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sfs/curve.hpp"
#include "sfs/errors.hpp"

using sfs::Curve;

namespace {

std::vector<double> random_grid(std::mt19937_64& rng, std::size_t n, double start) {
  std::uniform_real_distribution<double> gap(0.5, 1.5);
  std::vector<double> xs{start};
  while (xs.size() < n) xs.push_back(xs.back() + gap(rng));
  return xs;
}

// Distance in units in the last place.
double ulps(double a, double b) {
  if (a == b) return 0.0;
  const double ulp = std::nextafter(std::abs(b), std::numeric_limits<double>::infinity()) - std::abs(b);
  return std::abs(a - b) / ulp;
}

}  // namespace

TEST_CASE("construction sets the domain") {
  const Curve c({0, 1, 2}, {0, 1, 4}, 2);
  CHECK(c.min_d() == 0.0);
  CHECK(c.max_d() == 2.0);
  CHECK(c.order() == 2);
  CHECK(Curve({-5, 0, 5}, {1, 1, 1}).max_d() == 5.0);
  CHECK(Curve({0, 1}, {3, 4}, 1).size() == 2);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Curve({2, 1, 0}, {0, 1, 4}, 2), sfs::IVarNotAscend);
  CHECK_THROWS_AS(Curve({0, 1, 1}, {0, 1, 4}, 2), sfs::IVarNotAscend);
  CHECK_THROWS_AS(Curve({0, 1}, {0, 1, 4}, 2), sfs::SeqSizeMismatch);
  CHECK_THROWS_AS(Curve({0, 1}, {0, 1}, 2), sfs::InsufficientPoints);
  CHECK_THROWS_AS(Curve({0}, {0}, 1), sfs::InsufficientPoints);
  CHECK_THROWS_AS(Curve({0, 1, 2}, {0, 1, 4}, 3), sfs::InvalidOrder);
  CHECK_THROWS_AS(Curve({0, 1, 2}, {0, 1, 4}, 0), sfs::InvalidOrder);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Curve({0, nan, 2}, {0, 1, 4}), sfs::NonFiniteData);
  CHECK_THROWS_AS(Curve({0, 1, 2}, {0, INFINITY, 4}), sfs::NonFiniteData);
  CHECK_NOTHROW(Curve({0, 1}, {0, 1}, 1));
}

TEST_CASE("index brackets and clamps the right endpoint") {
  const std::vector<double> xs{0, 1, 2};
  CHECK(sfs::index(xs, 0.5) == 0);
  CHECK(sfs::index(xs, 1.0) == 1);
  CHECK(sfs::index(xs, 2.0) == 1);
  CHECK(sfs::index(xs, 0.0) == 0);
  // The clamp still reproduces the last sample.
  const Curve c(xs, {0, 1, 4});
  CHECK(c.eval(2.0) == 4.0);
  CHECK(c.eval(2.0) == oracle::curve(xs, {0, 1, 4}, 2, 2.0));
}

TEST_CASE("interp_quad") {
  CHECK(sfs::interp_quad(0, 0, 1, 1, 2, 2, 1.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(sfs::interp_quad(0, 0, 1, 1, 2, 4, 1.5) == doctest::Approx(2.25).epsilon(1e-15));
  for (double x : {-3.0, 0.0, 0.7, 2.0, 11.0}) {
    CHECK(sfs::interp_quad(0, 7.5, 1, 7.5, 2, 7.5, x) == 7.5);
  }
}

TEST_CASE("interp_quad equals the evenly spaced formula on evenly spaced stencils") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10), step(0.1, 3);
  for (int k = 0; k < 2000; ++k) {
    const double x0 = u(rng), h = step(rng);
    const double y0 = u(rng), y1 = u(rng), y2 = u(rng);
    const double x = x0 + std::uniform_real_distribution<double>(0, 2 * h)(rng);
    const double got = sfs::interp_quad(x0, y0, x0 + h, y1, x0 + 2 * h, y2, x);
    const double want = oracle::uniform_stencil_formula(x0, y0, x0 + h, y1, x0 + 2 * h, y2, x);
    REQUIRE(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("eval on x squared") {
  const Curve c({0, 1, 2}, {0, 1, 4});
  CHECK(c.eval(0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(c.eval(1.0) == 1.0);
  CHECK_THROWS_AS(c.eval(3.0), sfs::OutOfDomain);
  CHECK_THROWS_AS(c.eval(-1e-12), sfs::OutOfDomain);
  CHECK_THROWS_AS(c.eval(std::numeric_limits<double>::quiet_NaN()), sfs::OutOfDomain);
  CHECK(c.eval_d1(1.5) == doctest::Approx(3.0).epsilon(1e-15));
  for (double x : {0.0, 0.3, 1.0, 1.7, 2.0}) CHECK(c.eval_d2(x) == doctest::Approx(2.0));
  CHECK_THROWS_AS(c.eval_d1(2.5), sfs::OutOfDomain);
  CHECK_THROWS_AS(c.eval_d2(-0.5), sfs::OutOfDomain);

  const Curve flat({0, 1, 2, 3}, {5, 5, 5, 5});
  for (double x : {0.0, 0.4, 2.9, 3.0}) {
    CHECK(flat.eval_d1(x) == 0.0);
    CHECK(flat.eval(x) == 5.0);
  }
}

TEST_CASE("order 1 is piecewise linear") {
  const Curve c({0, 1, 3}, {0, 2, 0}, 1);
  CHECK(c.eval(0.5) == doctest::Approx(1.0));
  CHECK(c.eval(2.0) == doctest::Approx(1.0));
  CHECK(c.eval_d1(0.5) == doctest::Approx(2.0));
  CHECK(c.eval_d1(2.0) == doctest::Approx(-1.0));
  CHECK(c.eval_d2(2.0) == 0.0);
  CHECK(c.eval(3.0) == 0.0);
}

TEST_CASE("samples are reproduced within 4 ulps") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> val(-1000, 1000);
  for (int order : {1, 2}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto xs = random_grid(rng, 3 + trial % 20, val(rng));
      std::vector<double> ys(xs.size());
      for (double& y : ys) y = val(rng);
      const Curve c(xs, ys, order);
      for (std::size_t i = 0; i < xs.size(); ++i) REQUIRE(ulps(c.eval(xs[i]), ys[i]) <= 4.0);
    }
  }
}

TEST_CASE("quadratics are reproduced with their derivatives") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = coef(rng), b = coef(rng), c0 = coef(rng);
    const auto xs = random_grid(rng, 12, coef(rng));
    std::vector<double> ys;
    for (double x : xs) ys.push_back(c0 + b * x + a * x * x);
    const Curve c(xs, ys);
    std::uniform_real_distribution<double> at(c.min_d(), c.max_d());
    for (int k = 0; k < 100; ++k) {
      const double x = at(rng);
      const double p = c0 + b * x + a * x * x, dp = b + 2 * a * x, ddp = 2 * a;
      REQUIRE(std::abs(c.eval(x) - p) <= 1e-12 * std::max(1.0, std::abs(p)));
      REQUIRE(std::abs(c.eval_d1(x) - dp) <= 1e-12 * std::max(1.0, std::abs(dp)));
      REQUIRE(std::abs(c.eval_d2(x) - ddp) <= 1e-12 * std::max(1.0, std::abs(ddp)));
    }
  }
}

TEST_CASE("matches the brute-force oracle everywhere") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> val(-50, 50);
  for (int order : {1, 2}) {
    const auto xs = random_grid(rng, 15, 0.0);
    std::vector<double> ys(xs.size());
    for (double& y : ys) y = val(rng);
    const Curve c(xs, ys, order);
    std::uniform_real_distribution<double> at(c.min_d(), c.max_d());
    for (int k = 0; k < 500; ++k) {
      const double x = at(rng);
      using W = oracle::What;
      CHECK(c.eval(x) == doctest::Approx(oracle::curve(xs, ys, order, x)).epsilon(1e-12));
      CHECK(c.eval_d1(x) == doctest::Approx(oracle::curve(xs, ys, order, x, W::d1)).epsilon(1e-11));
      CHECK(c.eval_d2(x) ==
            doctest::Approx(oracle::curve(xs, ys, order, x, W::d2)).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("first derivative agrees with central differences between samples") {
  std::vector<double> xs, ys;
  for (int k = 0; k <= 40; ++k) {
    xs.push_back(0.1 * k);
    ys.push_back(std::sin(xs.back()));
  }
  const Curve c(xs, ys);
  const double step = 1e-6 * (c.max_d() - c.min_d());
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> at(c.min_d(), c.max_d());
  int checked = 0;
  while (checked < 200) {
    const double x = at(rng);
    const std::size_t i = sfs::index(xs, x);
    // Stay clear of the sample points where the stencil switches.
    if (x - xs[i] < 2 * step || xs[i + 1] - x < 2 * step) continue;
    const double fd = (c.eval(x + step) - c.eval(x - step)) / (2 * step);
    REQUIRE(std::abs(c.eval_d1(x) - fd) <= 1e-4);
    ++checked;
  }
}

TEST_CASE("evaluation is deterministic") {
  const Curve a({0, 0.3, 1.1, 2.0}, {1, -2, 0.5, 3});
  const Curve b({0, 0.3, 1.1, 2.0}, {1, -2, 0.5, 3});
  for (double x = 0; x <= 2.0; x += 0.013) {
    CHECK(a.eval(x) == b.eval(x));
    CHECK(a.eval_d1(x) == b.eval_d1(x));
  }
  CHECK(a == b);
}
