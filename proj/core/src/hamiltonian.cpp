#include "abelcycle/hamiltonian.hpp"

#include <cmath>

#include "abelcycle/error.hpp"
#include "abelcycle/polynomial.hpp"
#include "abelcycle/roots.hpp"
#include "abelcycle/special.hpp"

namespace abelcycle {

ModelParams::ModelParams(int n) : n_(n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "exponent n must be >= 1");
  const double nn = n;
  center_u_ = special::nth_root(nn + 1.0, n);
  p1_ = -nn * center_u_ * center_u_ / (2.0 * (nn + 2.0));
  denom_ = (nn + 1.0) * (nn + 2.0);
  right_extent_ = special::nth_root(denom_ / 2.0, n);
}

double potential(const ModelParams& params, double u) {
  return -0.5 * u * u + poly::ipow(u, params.n() + 2) / params.denom();
}

double potential_deriv(const ModelParams& params, double u) {
  return -u + poly::ipow(u, params.n() + 1) / (params.n() + 1.0);
}

double hamiltonian(const ModelParams& params, double u, double y) {
  return 0.5 * y * y + potential(params, u);
}

double hessian_determinant(const ModelParams& params, double u) {
  return poly::ipow(u, params.n()) - 1.0;
}

double potential_divided_difference(const ModelParams& params, double u, double v) {
  return -0.5 * (u + v) + poly::complete_homogeneous(u, v, params.n() + 1) / params.denom();
}

double potential_second_divided_difference(const ModelParams& params, double a, double b,
                                           double x) {
  return -0.5 + poly::complete_homogeneous(a, b, x, params.n()) / params.denom();
}

std::vector<FixedPoint> fixed_points(const ModelParams& params) {
  std::vector<double> abscissae{0.0, params.center_u()};
  if (params.n() % 2 == 0) abscissae.push_back(-params.center_u());

  std::vector<FixedPoint> out;
  out.reserve(abscissae.size());
  for (double u : abscissae) {
    const double det = hessian_determinant(params, u);
    out.push_back({u, 0.0, det < 0.0 ? FixedPointKind::Saddle : FixedPointKind::Center});
  }
  return out;
}

LevelCurveGeometry turning_points(const ModelParams& params, double h) {
  const double p1 = params.p1();
  if (!(h < 0.0) || h < p1 - kDegenerateGap) {
    throw Error(Errc::EnergyOutsideAnnulus, "h must lie in (p1, 0)");
  }
  const double c = params.center_u();
  if (h <= p1 + kDegenerateGap) return {h, c, c, true};

  const auto f = [&](double u) { return potential(params, u) - h; };
  const auto df = [&](double u) { return potential_deriv(params, u); };
  const roots::RootOptions opt{kRootTol, 200};

  LevelCurveGeometry g;
  g.h = h;
  g.alpha = roots::newton_bisect(f, df, 0.0, c, opt);
  // Phi(B) = 0 only up to rounding; nudge the bracket end outward.
  g.beta = roots::newton_bisect(f, df, c, params.right_extent_B() * (1.0 + 1e-9), opt);
  return g;
}

double involution(const ModelParams& params, double u) {
  const double b = params.right_extent_B();
  if (!(u > 0.0) || !(u < b)) {
    throw Error(Errc::OutsideInvolutionDomain, "u must lie in (0, B)");
  }
  const double c = params.center_u();
  if (u == c) return c;

  // Phi[u, v] = 0 singles out v = delta(u) on the opposite branch without
  // cancellation near the center.
  const auto f = [&](double v) { return potential_divided_difference(params, u, v); };
  const auto df = [&](double v) {
    if (v == u) return 0.0;
    return (potential_deriv(params, v) - f(v)) / (v - u);
  };
  const roots::RootOptions opt{kRootTol, 200};
  if (u < c) return roots::newton_bisect(f, df, c, b * (1.0 + 1e-9), opt);
  return roots::newton_bisect(f, df, 0.0, c, opt);
}

}  // namespace abelcycle
