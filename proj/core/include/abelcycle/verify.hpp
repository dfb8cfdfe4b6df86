#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abelcycle/abelian.hpp"
#include "abelcycle/ode.hpp"

namespace abelcycle::verify {

struct VerifyOptions {
  int n_min = 1;
  int n_max = 10;
  /// h-grid size of the monotonicity sweeps.
  int grid = 64;
  /// Random (u, v) samples per n for the polynomial identity.
  int random_samples = 1000;
  std::uint64_t seed = 20240601;
  AbelianOptions quadrature{};
  ode::IntegratorOptions ode{};
  /// Green's-theorem check needs orbit tracing; it is the slowest property.
  bool include_area_check = true;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  /// Worst observed value of the checked quantity (residual, slope, ...).
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Runs every numerical property over n in [n_min, n_max].
std::vector<PropertyResult> run_all(const VerifyOptions& options);

PropertyResult check_identity(const VerifyOptions& options);
PropertyResult check_involution(const VerifyOptions& options);
PropertyResult check_potential_branches(const VerifyOptions& options);
PropertyResult check_fixed_points(const VerifyOptions& options);
PropertyResult check_turning_point_nesting(const VerifyOptions& options);
PropertyResult check_ratio_monotonicity(const VerifyOptions& options);
PropertyResult check_ratio_bounds(const VerifyOptions& options);
PropertyResult check_endpoint_limits(const VerifyOptions& options);
PropertyResult check_beta_consistency(const VerifyOptions& options);
PropertyResult check_positivity_certificate(const VerifyOptions& options);
PropertyResult check_T_monotonicity(const VerifyOptions& options);
PropertyResult check_green_area(const VerifyOptions& options);

/// Closed-form involution for n = 1, the positive root of
/// v^2 + (u - 3) v + (u^2 - 3u) = 0.
double involution_n1_closed_form(double u);

}  // namespace abelcycle::verify
