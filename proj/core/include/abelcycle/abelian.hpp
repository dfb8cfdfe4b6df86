#pragma once

#include <vector>

#include "abelcycle/hamiltonian.hpp"
#include "abelcycle/quadrature.hpp"

namespace abelcycle {

struct AbelianOptions {
  /// Relative tolerance of the adaptive Gauss–Legendre driver.
  double rel_tol = 1e-12;
  /// Points per Gauss–Legendre panel.
  int order = 16;
};

/// Value of one Abelian integral A_k(h) with its quadrature error estimate.
struct AbelianIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
  bool degenerate = false;
};

struct AbelianResult {
  double h = 0.0;
  double A0 = 0.0;
  double An = 0.0;
  /// F_n(h) = A_n / A_0.
  double ratio = 0.0;
  /// c_0(h) = 1 / (F_n(h) - 1).
  double limit_speed_c0 = 0.0;
  /// Propagated error bound on the ratio.
  double quadrature_error_estimate = 0.0;
  bool degenerate = false;
};

struct HomoclinicValues {
  double J0 = 0.0;
  double Jn = 0.0;
  double ratio_at_zero = 0.0;
  double ratio_at_p1 = 0.0;
};

struct CurvePoint {
  double h = 0.0;
  double A0 = 0.0;
  double An = 0.0;
  double ratio = 0.0;
  double c0 = 0.0;
  double err = 0.0;
};

struct EndpointLimits {
  double ratio_at_p1 = 0.0;
  double ratio_at_zero = 0.0;
};

/// A_k(h) = 2 * integral over [alpha, beta] of u^k sqrt(2(h - Phi(u))) du.
///
/// With u = alpha + (beta - alpha) sin^2(theta) and
/// 2(h - Phi(u)) = (u - alpha)(beta - u) g(u), the integrand becomes
/// 4 (beta - alpha)^2 sin^2 cos^2 u^k sqrt(g(u)), smooth on [0, pi/2].
/// Requires p1 <= h < 0 (degenerate near p1); any k >= 0 is accepted,
/// the model only needs k in {0, n}.
AbelianIntegral abelian_integral_detailed(const ModelParams& params, int k, double h,
                                          const AbelianOptions& opt = {});

double abelian_integral(const ModelParams& params, int k, double h,
                        const AbelianOptions& opt = {});

/// A_0, A_n, F_n(h) and c_0(h) at one energy.
AbelianResult ratio_F(const ModelParams& params, double h, const AbelianOptions& opt = {});

/// Beta-function closed forms of J_0(0), J_n(0) on the homoclinic loop.
HomoclinicValues homoclinic_values(const ModelParams& params);

/// J_k(0) = integral over [0, B] of u^(k+1) sqrt(1 - 2u^n/((n+1)(n+2))) du by quadrature.
double homoclinic_integral(const ModelParams& params, int k, const AbelianOptions& opt = {});

/// The speed c > 0 with A(h) = 0, i.e. 1 / (F_n(h) - 1).
double speed_for_level(const ModelParams& params, double h, const AbelianOptions& opt = {});

/// Inverse of speed_for_level: the energy h in (p1, 0) where F_n(h) = 1 + 1/c.
/// Bisection on the monotone ratio; throws Error(NoLevelForSpeed) when 1 + 1/c
/// falls outside the ratio range.
double level_for_speed(const ModelParams& params, double c, const AbelianOptions& opt = {});

/// Uniform grid of h over (p1 + m, -m), m = 1e-6 |p1|, with endpoints included.
std::vector<double> annulus_grid(const ModelParams& params, int grid_size);

/// ratio_F evaluated over annulus_grid, in grid order.
std::vector<CurvePoint> c0_curve(const ModelParams& params, int grid_size,
                                 const AbelianOptions& opt = {});

/// F_n extrapolated to both annulus endpoints from four interior samples each.
EndpointLimits extrapolated_endpoint_limits(const ModelParams& params,
                                            const AbelianOptions& opt = {});

/// dF_n/dh by central differences with step 1e-5 |p1|.
double ratio_derivative(const ModelParams& params, double h, const AbelianOptions& opt = {});

/// Theoretical bounds 2(n+1)(n+2)/(3n+4) and n+1 on F_n.
double ratio_lower_bound(int n);
double ratio_upper_bound(int n);

}  // namespace abelcycle
