#include "abelcycle/dynamics.hpp"

#include <cmath>

#include "abelcycle/error.hpp"
#include "abelcycle/polynomial.hpp"
#include "abelcycle/roots.hpp"

namespace abelcycle {

namespace {

using ode::DenseStep;
using ode::DormandPrince54;
using ode::State;

DormandPrince54<2> reduced_solver(const PerturbedParams& p, const ode::IntegratorOptions& opt) {
  return DormandPrince54<2>(
      [p](double, const State<2>& s) {
        const PhasePoint f = vector_field_reduced(p, s[0], s[1]);
        return State<2>{f.u, f.y};
      },
      opt);
}

void check_escape(const PerturbedParams& p, double factor, double t, double u) {
  const double limit = factor * p.model.right_extent_B();
  if (!std::isfinite(u) || std::abs(u) > limit) {
    throw Error(Errc::UnboundedOrbit, "|u| exceeded " + std::to_string(limit) +
                                          " at eta = " + std::to_string(t));
  }
}

/// Root of y on the dense output, then Newton in eta on re-integrated states.
SectionCrossing locate_crossing(const DormandPrince54<2>& solver, const DenseStep<2>& step) {
  const auto g = [&](double t) { return step.component(1, t); };
  const double scale = std::max(1.0, std::abs(step.t1()));
  double t = roots::bisect_secant(g, step.t0, step.t1(),
                                  {4.0 * std::numeric_limits<double>::epsilon() * scale, 200},
                                  0.25 * step.h);
  const auto state_at = [&](double te) {
    const double dt = te - step.t0;
    return dt > 0.0 ? solver.single_step(step.t0, step.y0, dt) : step.y0;
  };
  State<2> s = state_at(t);
  for (int it = 0; it < 4; ++it) {
    const State<2> f = solver.rhs(t, s);
    if (f[1] == 0.0) break;
    const double dt = -s[1] / f[1];
    if (std::abs(dt) > step.h) break;
    t += dt;
    s = state_at(t);
    if (std::abs(dt) <= 4.0 * std::numeric_limits<double>::epsilon() * scale) break;
  }
  return {t, s[0], std::abs(s[1])};
}

/// Dense samples at eta = k * dt, k = 0..count, of an N-dimensional system.
template <std::size_t N, class EscapeCheck>
std::vector<State<N>> sample_uniform(const DormandPrince54<N>& solver, const State<N>& y0,
                                     double dt, int count, EscapeCheck&& escape) {
  std::vector<State<N>> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  out.push_back(y0);
  int k = 1;
  const double span = dt * count;
  solver.integrate(0.0, y0, span, [&](const DenseStep<N>& step) {
    escape(step.t1(), step.y1);
    while (k <= count && k * dt <= step.t1() * (1.0 + 1e-14)) {
      out.push_back(k == count ? step.y1 : step(k * dt));
      ++k;
    }
    return true;
  });
  while (static_cast<int>(out.size()) < count + 1) out.push_back(out.back());
  return out;
}

}  // namespace

PerturbedParams::PerturbedParams(ModelParams m, double eps, double speed)
    : model(m), epsilon(eps), c(speed) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw Error(Errc::InvalidArgument, "epsilon must be >= 0");
  }
  if (!(speed > 0.0) || !std::isfinite(speed)) {
    throw Error(Errc::InvalidArgument, "wave speed c must be > 0");
  }
}

PhasePoint vector_field_reduced(const PerturbedParams& p, double u, double y) {
  const int n = p.model.n();
  const double un = poly::ipow(u, n);
  const double restoring = u - un * u / (n + 1.0);
  const double damping = p.epsilon * std::sqrt(p.c) * (un - (1.0 + 1.0 / p.c)) * y;
  return {y, restoring + damping};
}

ode::State<3> vector_field_full3d(const PerturbedParams& p, double u, double y, double z) {
  if (!(p.epsilon > 0.0)) {
    throw Error(Errc::InvalidArgument, "the slow-fast system is singular at epsilon = 0");
  }
  const int n = p.model.n();
  const double sc = std::sqrt(p.c);
  const double fast =
      (u - poly::ipow(u, n + 1) / (n + 1.0) - z - (p.epsilon / sc) * y) / (p.epsilon * sc);
  return {y, z, fast};
}

double slow_manifold_z(const PerturbedParams& p, double u, double y) {
  const int n = p.model.n();
  const double un = poly::ipow(u, n);
  return u - un * u / (n + 1.0) + p.epsilon * std::sqrt(p.c) * (un - 1.0 - 1.0 / p.c) * y;
}

Trajectory integrate(const PerturbedParams& p, PhasePoint initial, double eta_span,
                     const IntegrateOptions& options) {
  if (!(eta_span > 0.0)) throw Error(Errc::InvalidArgument, "eta_span must be positive");
  const DormandPrince54<2> solver = reduced_solver(p, options.ode);
  const double center = p.model.center_u();
  const double dt = options.sample_interval;

  Trajectory traj;
  if (options.record_states) traj.states.push_back({0.0, initial.u, initial.y});
  long next_k = 1;

  const auto observer = [&](const DenseStep<2>& step) -> bool {
    check_escape(p, options.escape_factor, step.t1(), step.y1[0]);
    if (options.record_states) {
      if (dt > 0.0) {
        while (static_cast<double>(next_k) * dt <= step.t1() * (1.0 + 1e-14)) {
          const double te = std::min(static_cast<double>(next_k) * dt, step.t1());
          const State<2> s = step(te);
          traj.states.push_back({te, s[0], s[1]});
          ++next_k;
        }
      } else {
        traj.states.push_back({step.t1(), step.y1[0], step.y1[1]});
      }
    }
    if (step.y0[1] < 0.0 && step.y1[1] >= 0.0) {
      const SectionCrossing cr = locate_crossing(solver, step);
      if (cr.u > 0.0 && cr.u < center) {
        traj.crossings.push_back(cr);
        if (options.stop_after_crossings > 0 &&
            static_cast<int>(traj.crossings.size()) >= options.stop_after_crossings) {
          return false;
        }
      }
    }
    return true;
  };

  solver.integrate(0.0, State<2>{initial.u, initial.y}, eta_span, observer, &traj.step_stats);
  return traj;
}

ReturnResult return_map_detailed(const PerturbedParams& p, double u0,
                                 const ReturnMapOptions& options) {
  if (!(u0 > 0.0) || !(u0 < p.model.center_u())) {
    throw Error(Errc::InvalidArgument, "return map start must satisfy 0 < u0 < center_u");
  }
  IntegrateOptions io;
  io.ode = options.ode;
  io.record_states = false;
  io.stop_after_crossings = 1;
  const Trajectory t = integrate(p, {u0, 0.0}, options.horizon, io);
  if (t.crossings.empty()) {
    throw Error(Errc::NoReturn, "no section crossing within eta horizon");
  }
  return {t.crossings.front().u, t.crossings.front().eta};
}

double return_map(const PerturbedParams& p, double u0, const ReturnMapOptions& options) {
  return return_map_detailed(p, u0, options).u;
}

DisplacementSample displacement(const PerturbedParams& p, double u0,
                                const ReturnMapOptions& options) {
  try {
    return {u0, return_map(p, u0, options) - u0, false};
  } catch (const Error& e) {
    if (e.code() == Errc::UnboundedOrbit || e.code() == Errc::NoReturn) {
      return {u0, -u0, true};
    }
    throw;
  }
}

std::vector<DisplacementSample> displacement_grid(const PerturbedParams& p, double lo, double hi,
                                                  int count, const ReturnMapOptions& options) {
  if (count < 2) throw Error(Errc::InvalidArgument, "displacement grid needs >= 2 points");
  std::vector<DisplacementSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double u = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    out.push_back(displacement(p, u, options));
  }
  return out;
}

int count_sign_changes(std::span<const DisplacementSample> grid) {
  int changes = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double a = grid[i - 1].displacement;
    const double b = grid[i].displacement;
    if ((a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)) ++changes;
  }
  return changes;
}

LimitCycleReport find_limit_cycle(const PerturbedParams& p, std::pair<double, double> bracket,
                                  const LimitCycleOptions& options) {
  auto [lo, hi] = bracket;
  if (lo > hi) std::swap(lo, hi);
  const auto& rm = options.return_map;
  const auto d = [&](double u) { return displacement(p, u, rm).displacement; };

  const double d_lo = d(lo);
  const double d_hi = d(hi);
  if ((d_lo < 0.0) == (d_hi < 0.0) && d_lo != 0.0 && d_hi != 0.0) {
    throw Error(Errc::NoFixedPointInBracket,
                "P(u) - u has the same sign at u = " + std::to_string(lo) + " and u = " +
                    std::to_string(hi));
  }

  LimitCycleReport report;
  const double u_star = roots::bisect_secant(d, lo, hi, {1e-13, 200}, 1e-3);
  report.section_fixed_point_u = u_star;
  report.displacement_residual = d(u_star);
  report.converged = std::abs(report.displacement_residual) <= options.fixed_point_tol;
  report.energy_estimate_h = hamiltonian(p.model, u_star, 0.0);

  const double step = options.multiplier_step;
  report.stability_multiplier =
      std::abs(return_map(p, u_star + step, rm) - return_map(p, u_star - step, rm)) / (2.0 * step);

  const ReturnResult ret = return_map_detailed(p, u_star, rm);
  report.period = ret.eta;
  IntegrateOptions io;
  io.ode = rm.ode;
  io.sample_interval = ret.eta / options.cycle_samples;
  const Trajectory t = integrate(p, {u_star, 0.0}, ret.eta, io);
  report.cycle.reserve(t.states.size());
  for (const auto& s : t.states) report.cycle.push_back({s.u, s.y});
  return report;
}

ReductionResult validate_reduction(const PerturbedParams& p, PhasePoint initial, double eta_span,
                                   const ode::IntegratorOptions& ode_options, int samples) {
  if (!(p.epsilon > 0.0) || p.epsilon > 0.2) {
    throw Error(Errc::InvalidArgument, "reduction validation needs 0 < epsilon <= 0.2");
  }
  if (!(eta_span > 0.0)) throw Error(Errc::InvalidArgument, "eta_span must be positive");
  const double dt = eta_span / samples;

  const auto escape2 = [&](double t, const State<2>& s) {
    check_escape(p, 10.0, t, s[0]);
  };
  const auto escape3 = [&](double t, const State<3>& s) {
    check_escape(p, 10.0, t, s[0]);
  };

  const auto reduced = sample_uniform<2>(reduced_solver(p, ode_options),
                                         State<2>{initial.u, initial.y}, dt, samples, escape2);

  const DormandPrince54<3> full(
      [p](double, const State<3>& s) { return vector_field_full3d(p, s[0], s[1], s[2]); },
      ode_options);
  ReductionResult result;
  result.initial_z = slow_manifold_z(p, initial.u, initial.y);
  const auto slow_fast = sample_uniform<3>(
      full, State<3>{initial.u, initial.y, result.initial_z}, dt, samples, escape3);

  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const double du = reduced[i][0] - slow_fast[i][0];
    const double dy = reduced[i][1] - slow_fast[i][1];
    result.max_deviation = std::max(result.max_deviation, std::hypot(du, dy));
  }
  return result;
}

double fitted_order(std::span<const double> epsilons, std::span<const double> deviations) {
  if (epsilons.size() != deviations.size() || epsilons.size() < 2) {
    throw Error(Errc::InvalidArgument, "fitted_order needs >= 2 matched samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(epsilons.size());
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    const double x = std::log(epsilons[i]);
    const double y = std::log(deviations[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double polygon_area(std::span<const PhasePoint> polyline) {
  double twice = 0.0;
  const std::size_t m = polyline.size();
  for (std::size_t i = 0; i < m; ++i) {
    const PhasePoint& a = polyline[i];
    const PhasePoint& b = polyline[(i + 1) % m];
    twice += a.u * b.y - b.u * a.y;
  }
  return 0.5 * twice;
}

std::vector<PhasePoint> trace_unperturbed_orbit(const ModelParams& params, double h, int samples,
                                                const ode::IntegratorOptions& ode_options) {
  const LevelCurveGeometry geo = turning_points(params, h);
  if (geo.degenerate) return {{geo.alpha, 0.0}};
  const PerturbedParams p(params, 0.0, 1.0);
  ReturnMapOptions rm;
  rm.ode = ode_options;
  const ReturnResult ret = return_map_detailed(p, geo.alpha, rm);

  IntegrateOptions io;
  io.ode = ode_options;
  io.sample_interval = ret.eta / samples;
  const Trajectory t = integrate(p, {geo.alpha, 0.0}, ret.eta, io);
  std::vector<PhasePoint> out;
  out.reserve(t.states.size());
  for (const auto& s : t.states) out.push_back({s.u, s.y});
  return out;
}

}  // namespace abelcycle
