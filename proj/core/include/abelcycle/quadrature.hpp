#pragma once

#include <functional>
#include <span>
#include <vector>

namespace abelcycle::quad {

/// Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights of the `order`-point rule, computed by Newton iteration
/// on P_order. Rules are cached per order; the returned reference is stable.
const GaussLegendreRule& gauss_legendre(int order);

/// Single-panel Gauss–Legendre estimate of the integral of f over [a, b].
double gauss_legendre_panel(const std::function<double(double)>& f, double a, double b,
                            const GaussLegendreRule& rule);

struct AdaptiveOptions {
  int order = 16;
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_depth = 40;
  int max_panels = 1 << 16;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
  bool converged = true;
};

/// Adaptive composite Gauss–Legendre quadrature.
///
/// A panel is accepted once the single-panel estimate and the sum over its two
/// halves agree to the requested tolerance; otherwise both halves are refined
/// recursively. The error estimate is the sum of accepted |whole - halves|
/// discrepancies plus a rounding floor proportional to the sum of |panel|.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const AdaptiveOptions& opt = {});

/// Composite trapezoid rule on `panels` equal panels. Used as a brute-force
/// reference in tests.
double trapezoid(const std::function<double(double)>& f, double a, double b, long panels);

/// Polynomial extrapolation (Neville) of samples (x_i, y_i) to x = target.
double neville_extrapolate(std::span<const double> x, std::span<const double> y, double target);

}  // namespace abelcycle::quad
