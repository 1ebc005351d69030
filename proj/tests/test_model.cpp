#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "sfs/errors.hpp"
#include "sfs/model.hpp"

using namespace sfs;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(k + 1 == n ? hi : lo + (hi - lo) * k / (n - 1));
  return out;
}

template <class F>
std::shared_ptr<const TemperatureField> field_of(F f, std::vector<double> times,
                                                 std::vector<double> positions, int order_space = 2) {
  ThermocoupleDataset ds;
  ds.times = std::move(times);
  ds.positions = std::move(positions);
  for (double t : ds.times) {
    for (double y : ds.positions) ds.temps.push_back(f(y, t));
  }
  ds.height = ds.positions.back();
  return std::make_shared<const TemperatureField>(fit_field(ds, 2, order_space));
}

MaterialProperties unit_material(double alpha = 0.0) {
  MaterialProperties mp;  // Cv = L = rho = 1
  mp.alpha_b = alpha;
  mp.alpha_e = alpha;
  return mp;
}

constexpr double t_l = 0.5;

SolidificationProblem manufactured() {
  auto field = field_of([](double, double t) { return 700 + 2 * (t - t_l); }, linspace(0, 2, 201),
                        {0.0, 0.05, 0.1});
  return make_problem(field, unit_material(), 0.05, t_l, 1.5);
}

}  // namespace

TEST_CASE("rhs reduces to the heating rate for unit properties") {
  const double c = -3.5;
  auto field = field_of([&](double, double t) { return 650 + c * t; }, linspace(0, 4, 9), {0.0, 0.05, 0.1});
  auto prob = make_problem(field, unit_material(123.0), 0.05, 0.5, 3.5);
  for (double t : {0.5, 1.7, 3.0}) {
    for (double fs : {0.0, 0.4, 1.0}) CHECK(rhs_im4(prob, t, fs) == doctest::Approx(c).epsilon(1e-12));
  }
  CHECK_THROWS_AS(rhs_im4(prob, 1.0, 1.5), FsOutOfRange);
  CHECK_THROWS_AS(rhs_im4(prob, 9.0, 0.5), OutOfDomain);
}

TEST_CASE("rhs vanishes on a static field") {
  auto field = field_of([](double, double) { return 640.0; }, linspace(0, 4, 9), {0.0, 0.05, 0.1});
  auto prob = make_problem(field, unit_material(1.0), 0.05, 0.5, 3.5);
  CHECK(rhs_im4(prob, 2.0, 0.3) == 0.0);
}

TEST_CASE("rhs with curvature in height and mixed properties") {
  // T = 600 + 2 t + 400 y^2: dT/dt = 2, d2T/dy2 = 800
  auto field = field_of([](double y, double t) { return 600 + 2 * t + 400 * y * y; }, linspace(0, 4, 9),
                        {0.0, 0.02, 0.05, 0.08, 0.1});
  MaterialProperties mp;
  mp.cv_liquid = PropertyPoly{1000};
  mp.cv_solid = PropertyPoly{800};
  mp.rho_liquid = PropertyPoly{2000};
  mp.rho_solid = PropertyPoly{3000};
  mp.latent_heat = 4e5;
  mp.alpha_b = 1e-4;
  mp.alpha_e = 3e-4;
  auto prob = make_problem(field, mp, 0.05, 0.5, 3.5);
  const double fs = 0.25;
  const double cv = 0.75 * 1000 + 0.25 * 800, rho = 0.75 * 2000 + 0.25 * 3000, alpha = 0.75e-4 + 0.75e-4;
  const double want = cv / (4e5 * rho) * (2 - alpha * 800);
  CHECK(rhs_im4(prob, 1.3, fs) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("manufactured linear solution") {
  const auto prob = manufactured();
  SolverSettings s;
  s.h = 1e-3;
  const auto res = solve_fraction_solid(prob, s);
  CHECK(res.terminated == SolidTermination::ReachedFullSolid);
  CHECK(std::abs(res.samples.back().t - (t_l + 0.5)) <= 1e-6);
  CHECK(res.samples.front().t == t_l);
  CHECK(res.samples.front().fs == 0.0);
  double worst = 0;
  for (const auto& smp : res.samples) worst = std::max(worst, std::abs(smp.fs - 2 * (smp.t - t_l)));
  CHECK(worst <= 1e-6);
  CHECK(res.clamp_count == 0);
  CHECK(res.negative_rhs_count == 0);
  for (const auto& smp : res.samples) {
    REQUIRE(smp.T == prob.field->eval(smp.t, prob.y_star));
    REQUIRE(smp.dTdt == prob.field->dT_dt(smp.t, prob.y_star));
    REQUIRE(std::abs(smp.dTdt - 2.0) <= 1e-9);
  }
}

TEST_CASE("static field stays liquid until the solidus time") {
  auto field = field_of([](double, double) { return 640.0; }, linspace(0, 4, 9), {0.0, 0.05, 0.1});
  SolidificationProblem prob = make_problem(field, unit_material(), 0.05, 0.5, 3.5);
  const auto res = solve_fraction_solid(prob);
  CHECK(res.terminated == SolidTermination::ReachedSolidus);
  CHECK(res.samples.back().t == 3.5);
  for (const auto& smp : res.samples) CHECK(smp.fs == 0.0);
}

TEST_CASE("step limit") {
  SolverSettings s;
  s.max_steps = 1;
  CHECK(solve_fraction_solid(manufactured(), s).terminated == SolidTermination::StepLimit);
}

TEST_CASE("cooling drives the state to the lower clamp") {
  auto field = field_of([](double y, double t) { return 700 + 100 * y - 5 * t; }, linspace(0, 10, 21),
                        {0.0, 0.05, 0.1});
  auto prob = make_problem(field, unit_material(), 0.05, 1.0, 9.0);
  SolverSettings s;
  s.h = 0.01;
  const auto res = solve_fraction_solid(prob, s);
  CHECK(res.terminated == SolidTermination::ReachedSolidus);
  CHECK(res.clamp_count > 0);
  for (const auto& smp : res.samples) {
    REQUIRE(smp.fs >= 0.0);
    REQUIRE(smp.fs <= 1.0);
  }
}

TEST_CASE("noisy data keeps fs in range and counts decreases") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> noise(-0.3, 0.3);
  auto field = field_of([&](double y, double t) { return 600 + 100 * y + 3 * t + noise(rng); },
                        linspace(0, 10, 41), {0.0, 0.03, 0.06, 0.1});
  auto prob = make_problem(field, unit_material(1e-5), 0.04, 0.5, 9.5);
  prob.material.latent_heat = 10.0;  // slow enough that fs stays below 1 for a while
  const auto res = solve_fraction_solid(prob);
  CHECK(res.samples.front().fs == 0.0);
  for (const auto& smp : res.samples) {
    REQUIRE(smp.fs >= 0.0);
    REQUIRE(smp.fs <= 1.0);
  }
  CHECK(res.negative_rhs_count > 0);
}

TEST_CASE("problem validation") {
  auto prob = manufactured();
  CHECK_NOTHROW(validate(prob));
  auto bad = prob;
  bad.T_liquidus += 0.01;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = prob;
  std::swap(bad.t_liquidus, bad.t_solidus);
  std::swap(bad.T_liquidus, bad.T_solidus);
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = prob;
  bad.y_star = 0.2;
  CHECK_THROWS_AS(validate(bad), OutOfDomain);
  CHECK_THROWS_AS(make_problem(prob.field, unit_material(), 0.05, 0.5, 2.5), OutOfDomain);
}

TEST_CASE("output orderings") {
  const auto res = solve_fraction_solid(manufactured());
  const auto by_T = as_function_of_temperature(res);
  REQUIRE(by_T.size() == res.samples.size());
  // Temperature rises in the manufactured problem, so ordering reverses time.
  for (std::size_t k = 0; k < by_T.size(); ++k) {
    CHECK(by_T[k].first == res.samples[res.samples.size() - 1 - k].T);
    CHECK(by_T[k].second == res.samples[res.samples.size() - 1 - k].fs);
  }
  const auto by_rate = as_function_of_cooling_rate(res);
  for (std::size_t k = 0; k < by_rate.size(); ++k) {
    CHECK(by_rate[k].first == res.samples[k].dTdt);
    CHECK(std::abs(by_rate[k].first - 2.0) <= 1e-9);
  }

  SolidificationResult one;
  one.samples.push_back({1.0, 650.0, -2.0, 0.0});
  CHECK(as_function_of_temperature(one).size() == 1);
  CHECK(as_function_of_cooling_rate(one).size() == 1);

  SolidificationResult plateau;
  plateau.samples = {{0, 650, 0, 0.0}, {1, 650, 0, 0.1}, {2, 660, 0, 0.2}, {3, 640, 0, 0.3}};
  const auto ordered = as_function_of_temperature(plateau);
  CHECK(ordered[0].first == 660);
  CHECK(ordered[1].second == 0.0);
  CHECK(ordered[2].second == 0.1);
  CHECK(ordered[3].first == 640);
}

TEST_CASE("monotone cooling trace orders strictly by temperature") {
  auto field = field_of([](double, double t) { return 700 - 5 * t; }, linspace(0, 10, 21), {0.0, 0.05, 0.1});
  const auto res = solve_fraction_solid(make_problem(field, unit_material(), 0.05, 1.0, 9.0));
  const auto by_T = as_function_of_temperature(res);
  for (std::size_t k = 1; k < by_T.size(); ++k) CHECK(by_T[k].first < by_T[k - 1].first);
}
