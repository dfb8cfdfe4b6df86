#pragma once

#include <span>
#include <utility>
#include <vector>

#include "abelcycle/hamiltonian.hpp"
#include "abelcycle/ode.hpp"

namespace abelcycle {

/// Reduced perturbed system
///   u' = y,  y' = u - u^(n+1)/(n+1) + eps sqrt(c) (u^n y - (1 + 1/c) y).
struct PerturbedParams {
  ModelParams model;
  double epsilon = 0.0;
  double c = 1.0;

  /// Throws Error(InvalidArgument) unless epsilon >= 0 and c > 0.
  PerturbedParams(ModelParams m, double eps, double speed);

  /// Large perturbations are allowed but reported.
  bool epsilon_warning() const noexcept { return epsilon > kEpsilonWarning; }

  static constexpr double kEpsilonWarning = 0.5;
};

struct PhasePoint {
  double u = 0.0;
  double y = 0.0;
};

struct TrajectorySample {
  double eta = 0.0;
  double u = 0.0;
  double y = 0.0;
};

/// Crossing of the section {y = 0, 0 < u < center_u} with y going from
/// negative to positive.
struct SectionCrossing {
  double eta = 0.0;
  double u = 0.0;
  /// |y| of the polished event state.
  double y_residual = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> states;
  std::vector<SectionCrossing> crossings;
  ode::StepStats step_stats;
};

struct IntegrateOptions {
  ode::IntegratorOptions ode{};
  /// Uniform output spacing in eta; 0 records every accepted step.
  double sample_interval = 0.0;
  bool record_states = true;
  /// Stop after this many section crossings (0: integrate the full span).
  int stop_after_crossings = 0;
  /// Orbits with |u| > escape_factor * B abort with Error(UnboundedOrbit).
  double escape_factor = 10.0;
};

struct ReturnMapOptions {
  ode::IntegratorOptions ode{};
  /// Maximum eta allowed before the first return.
  double horizon = 1e4;
};

struct ReturnResult {
  double u = 0.0;
  /// Return time.
  double eta = 0.0;
};

struct LimitCycleOptions {
  ReturnMapOptions return_map{};
  double fixed_point_tol = 1e-8;
  double multiplier_step = 1e-5;
  /// Points on the reported cycle polyline.
  int cycle_samples = 2000;
};

struct LimitCycleReport {
  double section_fixed_point_u = 0.0;
  double energy_estimate_h = 0.0;
  double stability_multiplier = 0.0;
  double displacement_residual = 0.0;
  double period = 0.0;
  std::vector<PhasePoint> cycle;
  bool converged = false;
};

struct ReductionResult {
  double max_deviation = 0.0;
  double initial_z = 0.0;
};

struct DisplacementSample {
  double u = 0.0;
  double displacement = 0.0;
  bool escaped = false;
};

PhasePoint vector_field_reduced(const PerturbedParams& p, double u, double y);

/// Slow-fast system (u, y, z) with eps sqrt(c) z' = u - u^(n+1)/(n+1) - z - (eps/sqrt(c)) y.
/// Throws Error(InvalidArgument) when epsilon == 0.
ode::State<3> vector_field_full3d(const PerturbedParams& p, double u, double y, double z);

/// Leading-order slow-manifold height z = u - u^(n+1)/(n+1) + eps sqrt(c)(u^n - 1 - 1/c) y.
double slow_manifold_z(const PerturbedParams& p, double u, double y);

/// Adaptive integration of the reduced system over [0, eta_span] with section
/// crossing detection on the dense output.
Trajectory integrate(const PerturbedParams& p, PhasePoint initial, double eta_span,
                     const IntegrateOptions& options = {});

/// First return to the section from (u0, 0); requires 0 < u0 < center_u.
ReturnResult return_map_detailed(const PerturbedParams& p, double u0,
                                 const ReturnMapOptions& options = {});

double return_map(const PerturbedParams& p, double u0, const ReturnMapOptions& options = {});

/// P(u) - u, with orbits that leave the annulus (unbounded or never returning)
/// counted as outward motion: displacement -u, escaped = true.
DisplacementSample displacement(const PerturbedParams& p, double u0,
                                const ReturnMapOptions& options = {});

/// Displacement on `count` equally spaced points of [lo, hi].
std::vector<DisplacementSample> displacement_grid(const PerturbedParams& p, double lo, double hi,
                                                  int count, const ReturnMapOptions& options = {});

/// Number of strict sign changes in a displacement grid.
int count_sign_changes(std::span<const DisplacementSample> grid);

/// Solves P(u) = u inside the bracket. Throws Error(NoFixedPointInBracket)
/// when the displacement has equal signs at both ends.
LimitCycleReport find_limit_cycle(const PerturbedParams& p, std::pair<double, double> bracket,
                                  const LimitCycleOptions& options = {});

/// Max (u, y)-distance between the 3D slow-fast solution started on the
/// leading-order slow manifold and the reduced solution, sampled on a uniform
/// grid over [0, eta_span]. Requires 0 < epsilon <= 0.2.
ReductionResult validate_reduction(const PerturbedParams& p, PhasePoint initial, double eta_span,
                                   const ode::IntegratorOptions& ode_options = {},
                                   int samples = 5000);

/// Least-squares slope of log(deviation) against log(epsilon).
double fitted_order(std::span<const double> epsilons, std::span<const double> deviations);

/// Signed shoelace area of a closed polyline (closing edge implied).
double polygon_area(std::span<const PhasePoint> polyline);

/// Traces the closed unperturbed orbit through (alpha(h), 0) over one period.
std::vector<PhasePoint> trace_unperturbed_orbit(const ModelParams& params, double h,
                                                int samples = 20000,
                                                const ode::IntegratorOptions& ode_options = {});

}  // namespace abelcycle
