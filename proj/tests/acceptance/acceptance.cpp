// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is nonzero iff any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abelcycle/abelian.hpp"
#include "abelcycle/dynamics.hpp"
#include "abelcycle/hamiltonian.hpp"
#include "abelcycle/identities.hpp"
#include "oracles.hpp"

using namespace abelcycle;

namespace {

constexpr double kHStar = -671.0 / 5376.0;
constexpr double kReferenceSpeed = 100000.0 / 388851.0;

struct Outcome {
  bool passed = false;
  std::string summary;
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string str(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Outcome ratio_reproduction() {
  const double ratio = ratio_F(ModelParams(5), kHStar).ratio;
  const double gap = std::abs(ratio - 4.88851);
  return {gap <= 5e-4, "A5/A0(h*) = " + str(ratio, 8) + ", |gap| = " + str(gap, 3) + " <= 5e-4"};
}

Outcome speed_reproduction() {
  const double c = speed_for_level(ModelParams(5), kHStar);
  const double rel = std::abs(c - kReferenceSpeed) / kReferenceSpeed;
  return {rel <= 1e-3, "c(h*) = " + str(c, 8) + " vs 100000/388851, rel gap = " + str(rel, 3) + " <= 1e-3"};
}

Outcome limit_cycle_detection() {
  const PerturbedParams p(ModelParams(5), 0.1, kReferenceSpeed);
  const LimitCycleReport r = find_limit_cycle(p, {0.1, 0.9});
  const double d_in = displacement(p, 0.1).displacement;
  const double d_out = displacement(p, 0.9).displacement;
  const bool ok = r.converged && std::abs(r.section_fixed_point_u - 0.49885) <= 0.02 &&
                  r.stability_multiplier < 1.0 && d_in > 0.0 && d_out < 0.0;
  return {ok, "u* = " + str(r.section_fixed_point_u) + ", multiplier = " + str(r.stability_multiplier) +
                  ", d(0.1) = " + str(d_in, 3) + ", d(0.9) = " + str(d_out, 3)};
}

Outcome endpoint_limits() {
  double worst_limit = 0.0, worst_beta = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const ModelParams m(n);
    const EndpointLimits lim = extrapolated_endpoint_limits(m);
    const double at_zero = 2.0 * (n + 1) * (n + 2) / (3.0 * n + 4.0);
    worst_limit = std::max({worst_limit, std::abs(lim.ratio_at_p1 - (n + 1.0)), std::abs(lim.ratio_at_zero - at_zero)});
    const HomoclinicValues hv = homoclinic_values(m);
    worst_beta = std::max(worst_beta, std::abs(hv.Jn / hv.J0 - at_zero));
  }
  return {worst_limit <= 1e-3 && worst_beta <= 1e-10,
          "max endpoint gap = " + str(worst_limit, 3) + " <= 1e-3, max Beta-ratio gap = " + str(worst_beta, 3) +
              " <= 1e-10 (n = 1..10)"};
}

Outcome monotonicity() {
  int violations = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto rows = c0_curve(ModelParams(n), 64);
    const double f_lo = ratio_lower_bound(n), f_hi = ratio_upper_bound(n);
    const double c_lo = 1.0 / n, c_hi = (3.0 * n + 4.0) / (2.0 * n * n + 3.0 * n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0 && !(rows[i].ratio < rows[i - 1].ratio)) ++violations;
      if (i > 0 && !(rows[i].c0 > rows[i - 1].c0)) ++violations;
      if (!(rows[i].ratio > f_lo && rows[i].ratio < f_hi)) ++violations;
      if (!(rows[i].c0 > c_lo && rows[i].c0 < c_hi)) ++violations;
    }
  }
  return {violations == 0, std::to_string(violations) + " monotonicity/bound violations over n = 1..10, 64 points"};
}

Outcome identities() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  // Relative to the magnitude of the combined terms; the pointwise ratio to
  // |rhs| is also reported, it is ill-conditioned where u is close to v.
  double worst_identity = 0.0, worst_pointwise = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i < 1000; ++i) {
      const double u = dist(rng), v = dist(rng);
      worst_identity = std::max(worst_identity, identity_relative_residual(n, u, v));
      const IdentitySides s = identity_sides(n, u, v);
      if (s.rhs != 0.0) worst_pointwise = std::max(worst_pointwise, std::abs(s.lhs - s.rhs) / std::abs(s.rhs));
    }
  }
  double worst_cert = 0.0;
  bool positive = true;
  for (int n = 1; n <= 12; ++n) {
    const ModelParams m(n);
    const double lo = m.center_u(), hi = m.right_extent_B();
    for (int i = 1; i <= 200; ++i) {
      const double u = lo + (hi - lo) * i / 201.0;
      const double cert = positivity_certificate(m, u);
      const double closed = positivity_closed_form(m, u, involution(m, u));
      positive = positive && cert > 0.0;
      worst_cert = std::max(worst_cert, std::abs(cert - closed) / std::abs(closed));
    }
  }
  return {worst_identity <= 1e-9 && positive && worst_cert <= 1e-8,
          "identity rel residual = " + str(worst_identity, 3) + " <= 1e-9 (n = 1..12; vs |rhs|: " +
              str(worst_pointwise, 3) + "), certificate " +
              (positive ? "positive" : "NOT positive") + ", closed-form rel gap = " + str(worst_cert, 3) +
              " <= 1e-8"};
}

Outcome oracle_equivalence() {
  struct Case {
    int n, k;
    double h;
  };
  const Case cases[] = {{2, 0, -0.4}, {2, 2, -0.4}, {5, 5, kHStar}, {1, 0, -0.3}, {7, 7, -0.2}};
  double worst_trap = 0.0;
  for (const Case& c : cases) {
    const double got = abelian_integral(ModelParams(c.n), c.k, c.h);
    const double want = oracle::brute_force_abelian(c.n, c.k, c.h, 1'000'000);
    worst_trap = std::max(worst_trap, std::abs(got - want) / std::abs(want));
  }
  double worst_area = 0.0;
  for (int n : {1, 3, 5, 8}) {
    const ModelParams m(n);
    for (double frac : {0.2, 0.5, 0.8}) {
      const double h = frac * m.p1();
      const double area = std::abs(polygon_area(trace_unperturbed_orbit(m, h)));
      const double a0 = abelian_integral(m, 0, h);
      worst_area = std::max(worst_area, std::abs(area - a0) / a0);
    }
  }
  return {worst_trap <= 1e-6 && worst_area <= 1e-4,
          "trapezoid-oracle rel gap = " + str(worst_trap, 3) + " <= 1e-6 (5 cases), orbit-area rel gap = " +
              str(worst_area, 3) + " <= 1e-4"};
}

Outcome conservative_limit() {
  double worst_drift = 0.0, worst_return = 0.0;
  for (int n : {1, 4, 5}) {
    const ModelParams m(n);
    const PerturbedParams p(m, 0.0, 1.0);
    for (double frac : {0.2, 0.5, 0.8}) {
      const double u0 = frac * m.center_u();
      const ReturnResult ret = return_map_detailed(p, u0);
      worst_return = std::max(worst_return, std::abs(ret.u - u0));
      IntegrateOptions opt;
      opt.sample_interval = ret.eta / 200.0;
      const Trajectory t = integrate(p, {u0, 0.0}, 10.0 * ret.eta, opt);
      const double h0 = hamiltonian(m, u0, 0.0);
      for (const auto& s : t.states) worst_drift = std::max(worst_drift, std::abs(hamiltonian(m, s.u, s.y) - h0));
    }
  }
  return {worst_drift <= 1e-7 && worst_return <= 1e-7,
          "max |H - H0| over 10 periods = " + str(worst_drift, 3) + " <= 1e-7, max |P(u) - u| = " +
              str(worst_return, 3) + " <= 1e-7"};
}

Outcome reduction_validation() {
  const ModelParams m(5);
  const std::vector<double> eps{0.04, 0.02, 0.01};
  std::vector<double> dev;
  for (double e : eps) dev.push_back(validate_reduction(PerturbedParams(m, e, kReferenceSpeed), {0.5, 0.0}, 50.0).max_deviation);
  const double order = fitted_order(eps, dev);
  return {order >= 1.7, "deviations " + str(dev[0], 3) + ", " + str(dev[1], 3) + ", " + str(dev[2], 3) +
                            "; fitted order = " + str(order, 4) + " >= 1.7"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ratio reproduction", 1.0, ratio_reproduction},
      {2, "speed reproduction", 1.0, speed_reproduction},
      {3, "limit-cycle detection", 30.0, limit_cycle_detection},
      {4, "endpoint limits", 60.0, endpoint_limits},
      {5, "monotonicity certificates", 60.0, monotonicity},
      {6, "algebraic identities", 10.0, identities},
      {7, "oracle equivalence", 120.0, oracle_equivalence},
      {8, "conservative limit", 60.0, conservative_limit},
      {9, "reduction validation", 60.0, reduction_validation},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool ok = o.passed && in_time;
    if (!ok) ++failures;
    std::printf("%s criterion %d (%s): %s [%.3f s, limit %.0f s%s]\n", ok ? "PASS" : "FAIL", c.id, c.title,
                o.summary.c_str(), secs, c.budget_s, in_time ? "" : ", TOO SLOW");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
