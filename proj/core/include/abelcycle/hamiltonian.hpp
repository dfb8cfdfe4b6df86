#pragma once

#include <vector>

namespace abelcycle {

/// Exponent n of the nonlinearity u^(n+1)/(n+1) together with the derived
/// geometry of the periodic annulus around the positive center.
///
/// Immutable after construction.
class ModelParams {
 public:
  /// Throws Error(InvalidArgument) unless n >= 1.
  explicit ModelParams(int n);

  int n() const noexcept { return n_; }
  /// Abscissa of the positive center, (n+1)^(1/n).
  double center_u() const noexcept { return center_u_; }
  /// Energy of the center, -n (n+1)^(2/n) / (2(n+2)).
  double p1() const noexcept { return p1_; }
  /// Energy of the saddle / homoclinic loop.
  double p2() const noexcept { return 0.0; }
  /// Right intercept of the homoclinic loop, ((n+1)(n+2)/2)^(1/n).
  double right_extent_B() const noexcept { return right_extent_; }
  /// (n+1)(n+2), the denominator of the potential's nonlinear term.
  double denom() const noexcept { return denom_; }

 private:
  int n_;
  double center_u_;
  double p1_;
  double right_extent_;
  double denom_;
};

enum class FixedPointKind { Saddle, Center };

struct FixedPoint {
  double u = 0.0;
  double y = 0.0;
  FixedPointKind kind = FixedPointKind::Saddle;
};

/// Turning points alpha(h) < center_u < beta(h) of the oval H = h.
struct LevelCurveGeometry {
  double h = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  /// Set when h lies within kDegenerateGap of p1; then alpha = beta = center_u.
  bool degenerate = false;
};

inline constexpr double kRootTol = 1e-12;
inline constexpr double kDegenerateGap = 1e-10;

/// Phi(u) = -u^2/2 + u^(n+2)/((n+1)(n+2)).
double potential(const ModelParams& params, double u);

/// Phi'(u) = -u + u^(n+1)/(n+1).
double potential_deriv(const ModelParams& params, double u);

/// H(u, y) = y^2/2 + Phi(u).
double hamiltonian(const ModelParams& params, double u, double y);

/// H_uu H_yy - H_uy^2 = u^n - 1, the classification quantity.
double hessian_determinant(const ModelParams& params, double u);

/// First divided difference (Phi(v) - Phi(u)) / (v - u), evaluated without
/// cancellation. Equals Phi'(u) when u == v.
double potential_divided_difference(const ModelParams& params, double u, double v);

/// Second divided difference Phi[a, b, x]; for a level h with Phi(a) = Phi(b) = h,
/// h - Phi(x) = (x - a)(b - x) Phi[a, b, x].
double potential_second_divided_difference(const ModelParams& params, double a, double b,
                                           double x);

/// Saddle at the origin plus one center (odd n) or two mirrored centers (even n).
std::vector<FixedPoint> fixed_points(const ModelParams& params);

/// Turning points of the oval through energy h.
///
/// Requires p1 <= h < 0. Energies within kDegenerateGap of p1 return the
/// degenerate geometry. Throws Error(EnergyOutsideAnnulus) otherwise.
LevelCurveGeometry turning_points(const ModelParams& params, double h);

/// Involution delta: the point on the opposite monotone branch of Phi with
/// Phi(delta(u)) = Phi(u). Requires 0 < u < B; throws
/// Error(OutsideInvolutionDomain) otherwise.
double involution(const ModelParams& params, double u);

}  // namespace abelcycle
