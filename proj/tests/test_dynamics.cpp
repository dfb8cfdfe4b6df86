#include <doctest.h>

#include <cmath>

#include "abelcycle/abelian.hpp"
#include "abelcycle/dynamics.hpp"
#include "abelcycle/error.hpp"

using namespace abelcycle;
using doctest::Approx;

namespace {

constexpr double kHStar = -671.0 / 5376.0;
constexpr double kReferenceSpeed = 100000.0 / 388851.0;

PerturbedParams reference_params() { return PerturbedParams(ModelParams(5), 0.1, kReferenceSpeed); }

}  // namespace

TEST_CASE("perturbed parameters validate their inputs") {
  CHECK_THROWS_AS(PerturbedParams(ModelParams(5), -0.1, 1.0), Error);
  CHECK_THROWS_AS(PerturbedParams(ModelParams(5), 0.1, 0.0), Error);
  CHECK_FALSE(reference_params().epsilon_warning());
  CHECK(PerturbedParams(ModelParams(5), 0.6, 1.0).epsilon_warning());
}

TEST_CASE("reduced vector field") {
  const PerturbedParams unperturbed(ModelParams(1), 0.0, 3.0);
  const PhasePoint at_center = vector_field_reduced(unperturbed, 2.0, 0.0);
  CHECK(at_center.u == 0.0);
  CHECK(at_center.y == 0.0);

  const PerturbedParams p = reference_params();
  const PhasePoint origin = vector_field_reduced(p, 0.0, 0.0);
  CHECK(origin.u == 0.0);
  CHECK(origin.y == 0.0);

  // Hand evaluation: 0.5 - 0.5^6/6 + 0.1 sqrt(c) (0.5^5 * 0.2 - (1 + 1/c) * 0.2).
  const double u = 0.5, y = 0.2;
  const double expected = u - std::pow(u, 6) / 6.0 +
                          0.1 * std::sqrt(kReferenceSpeed) *
                              (std::pow(u, 5) * y - (1.0 + 388851.0 / 100000.0) * y);
  const PhasePoint f = vector_field_reduced(p, u, y);
  CHECK(f.u == y);
  CHECK(f.y == Approx(expected).epsilon(1e-14));
}

TEST_CASE("slow-fast vector field") {
  const PerturbedParams p = reference_params();
  const auto origin = vector_field_full3d(p, 0.0, 0.0, 0.0);
  CHECK(origin[0] == 0.0);
  CHECK(origin[1] == 0.0);
  CHECK(origin[2] == 0.0);

  // On the leading-order slow manifold with y = 0 the fast component vanishes.
  const double u = 0.5;
  const auto on_manifold = vector_field_full3d(p, u, 0.0, u - std::pow(u, 6) / 6.0);
  CHECK(std::abs(on_manifold[2]) < 1e-12);
  // With y != 0 it reduces to the slow drift d/deta (u - u^6/6) = (1 - u^5) y.
  const double y = 0.2;
  const auto drift = vector_field_full3d(p, u, y, slow_manifold_z(p, u, y));
  CHECK(drift[2] == Approx((1.0 - std::pow(u, 5)) * y).epsilon(1e-10));

  CHECK_THROWS_AS(vector_field_full3d(PerturbedParams(ModelParams(5), 0.0, 1.0), 0.1, 0.0, 0.0),
                  Error);
}

TEST_CASE("unperturbed orbits close and conserve energy") {
  const ModelParams m(5);
  const PerturbedParams p(m, 0.0, kReferenceSpeed);
  const ReturnResult ret = return_map_detailed(p, 0.5);
  CHECK(std::abs(ret.u - 0.5) < 1e-7);

  IntegrateOptions opt;
  opt.sample_interval = ret.eta / 500.0;
  const Trajectory t = integrate(p, {0.5, 0.0}, 10.0 * ret.eta, opt);
  const double h0 = hamiltonian(m, 0.5, 0.0);
  double drift = 0.0;
  for (const auto& s : t.states) drift = std::max(drift, std::abs(hamiltonian(m, s.u, s.y) - h0));
  CHECK(drift <= 1e-7);
  REQUIRE(t.crossings.size() >= 9);
  for (const auto& c : t.crossings) {
    CHECK(c.y_residual <= 1e-10);
    CHECK(std::abs(c.u - 0.5) < 1e-7);
  }
  for (std::size_t i = 1; i < t.states.size(); ++i) CHECK(t.states[i].eta > t.states[i - 1].eta);

  for (double u0 : {0.05, 0.3, 0.9, 1.3}) CHECK(std::abs(return_map(p, u0) - u0) < 1e-7);
}

TEST_CASE("period error shrinks with the tolerance") {
  // Reference period at a tight tolerance; each tenfold tolerance cut must
  // shrink the error, consistent with tolerance proportionality.
  const PerturbedParams p(ModelParams(3), 0.0, 1.0);
  ReturnMapOptions tight;
  tight.ode.rtol = 1e-13;
  tight.ode.atol = 1e-15;
  const double reference = return_map_detailed(p, 0.4, tight).eta;
  double previous = 1.0;
  for (double rtol : {1e-6, 1e-8, 1e-10}) {
    ReturnMapOptions o;
    o.ode.rtol = rtol;
    o.ode.atol = rtol * 1e-2;
    const double err = std::abs(return_map_detailed(p, 0.4, o).eta - reference);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("perturbed trajectories approach the cycle from both sides") {
  const PerturbedParams p = reference_params();
  const Trajectory inner = integrate(p, {0.1, 0.0}, 300.0);
  REQUIRE(inner.crossings.size() >= 5);
  for (std::size_t i = 1; i < inner.crossings.size(); ++i) {
    CHECK(inner.crossings[i].u > inner.crossings[i - 1].u);
    CHECK(inner.crossings[i].u < 0.51);
    CHECK(inner.crossings[i].eta > inner.crossings[i - 1].eta);
  }
  CHECK(inner.crossings.back().u == Approx(0.495).epsilon(0.02));

  const Trajectory outer = integrate(p, {0.9, 0.0}, 300.0);
  REQUIRE(outer.crossings.size() >= 5);
  for (std::size_t i = 1; i < outer.crossings.size(); ++i) {
    CHECK(outer.crossings[i].u < outer.crossings[i - 1].u);
    CHECK(outer.crossings[i].u > 0.48);
  }
  for (const auto& c : outer.crossings) CHECK(c.y_residual <= 1e-10);

  CHECK(return_map(p, 0.1) > 0.1);
  CHECK(return_map(p, 0.9) < 0.9);
}

TEST_CASE("limit cycle of the reference parameters") {
  const PerturbedParams p = reference_params();
  const LimitCycleReport r = find_limit_cycle(p, {0.1, 0.9});
  CHECK(r.converged);
  CHECK(std::abs(r.displacement_residual) <= 1e-8);
  CHECK(std::abs(r.section_fixed_point_u - 0.49885) <= 0.02);
  CHECK(r.stability_multiplier < 1.0);
  CHECK(r.stability_multiplier > 0.0);
  CHECK(std::abs(r.energy_estimate_h - kHStar) <= 0.01);
  CHECK(r.period > 0.0);
  REQUIRE(r.cycle.size() > 100);
  CHECK(std::hypot(r.cycle.back().u - r.cycle.front().u, r.cycle.back().y - r.cycle.front().y) <
        1e-6);

  const double predicted = level_for_speed(p.model, p.c);
  CHECK(std::abs(r.energy_estimate_h - predicted) <= 0.02);
}

TEST_CASE("no cycle when 1 + 1/c is outside the ratio range") {
  const PerturbedParams p(ModelParams(5), 0.1, 5.0);
  try {
    find_limit_cycle(p, {0.1, 0.9});
    FAIL("expected NoFixedPointInBracket");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoFixedPointInBracket);
  }
  try {
    integrate(p, {0.1, 0.0}, 300.0);
    FAIL("expected UnboundedOrbit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnboundedOrbit);
  }
}

TEST_CASE("multiplier tends to one in the conservative limit") {
  const PerturbedParams weak(ModelParams(5), 1e-3, kReferenceSpeed);
  const LimitCycleReport r = find_limit_cycle(weak, {0.1, 0.9});
  CHECK(r.stability_multiplier < 1.0);
  CHECK(r.stability_multiplier > 0.99);
  CHECK(std::abs(r.energy_estimate_h - kHStar) < 1e-3);
}

TEST_CASE("displacement has exactly one sign change") {
  const PerturbedParams p = reference_params();
  const auto grid = displacement_grid(p, 0.05, 0.95 * p.model.center_u(), 50);
  CHECK(count_sign_changes(grid) == 1);
  for (const auto& s : grid) CHECK_FALSE(s.escaped);
}

TEST_CASE("even n: trajectories are point-symmetric") {
  const PerturbedParams p(ModelParams(4), 0.1, 0.3);
  IntegrateOptions opt;
  opt.sample_interval = 0.05;
  const Trajectory a = integrate(p, {0.5, 0.1}, 40.0, opt);
  const Trajectory b = integrate(p, {-0.5, -0.1}, 40.0, opt);
  REQUIRE(a.states.size() == b.states.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    worst = std::max(worst, std::abs(a.states[i].u + b.states[i].u));
    worst = std::max(worst, std::abs(a.states[i].y + b.states[i].y));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("return map errors") {
  const PerturbedParams p = reference_params();
  CHECK_THROWS_AS(return_map(p, 0.0), Error);
  CHECK_THROWS_AS(return_map(p, p.model.center_u()), Error);
  ReturnMapOptions short_horizon;
  short_horizon.horizon = 1.0;
  try {
    return_map(p, 0.5, short_horizon);
    FAIL("expected NoReturn");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoReturn);
  }
}

TEST_CASE("Green's theorem: traced orbit area equals A_0") {
  for (int n : {1, 5}) {
    const ModelParams m(n);
    for (double h : {0.5 * m.p1(), kHStar * (n == 5 ? 1.0 : 2.0)}) {
      const auto orbit = trace_unperturbed_orbit(m, h);
      const double area = std::abs(polygon_area(orbit));
      CHECK(area == Approx(abelian_integral(m, 0, h)).epsilon(1e-4));
    }
  }
}

TEST_CASE("reduced system tracks the slow-fast system to second order") {
  const PerturbedParams base = reference_params();
  std::vector<double> eps{0.04, 0.02, 0.01};
  std::vector<double> dev;
  for (double e : eps) {
    const PerturbedParams p(base.model, e, base.c);
    dev.push_back(validate_reduction(p, {0.5, 0.0}, 50.0).max_deviation);
  }
  CHECK(dev[0] > dev[1]);
  CHECK(dev[1] > dev[2]);
  CHECK(fitted_order(eps, dev) >= 1.7);

  const ReductionResult coarse = validate_reduction(reference_params(), {0.5, 0.0}, 50.0);
  CHECK(std::isfinite(coarse.max_deviation));
  CHECK_THROWS_AS(validate_reduction(PerturbedParams(base.model, 0.0, base.c), {0.5, 0.0}, 50.0),
                  Error);
  CHECK_THROWS_AS(validate_reduction(PerturbedParams(base.model, 0.3, base.c), {0.5, 0.0}, 50.0),
                  Error);
}

TEST_CASE("polygon area of a unit square") {
  const std::vector<PhasePoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(square) == 1.0);
}
