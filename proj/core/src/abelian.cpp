#include "abelcycle/abelian.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "abelcycle/error.hpp"
#include "abelcycle/polynomial.hpp"
#include "abelcycle/roots.hpp"
#include "abelcycle/special.hpp"

namespace abelcycle {

namespace {

quad::AdaptiveOptions quadrature_options(const AbelianOptions& opt) {
  quad::AdaptiveOptions q;
  q.order = opt.order;
  q.rel_tol = opt.rel_tol;
  return q;
}

}  // namespace

double ratio_lower_bound(int n) {
  const double nn = n;
  return 2.0 * (nn + 1.0) * (nn + 2.0) / (3.0 * nn + 4.0);
}

double ratio_upper_bound(int n) { return n + 1.0; }

AbelianIntegral abelian_integral_detailed(const ModelParams& params, int k, double h,
                                          const AbelianOptions& opt) {
  if (k < 0) throw Error(Errc::InvalidArgument, "power k must be nonnegative");
  const LevelCurveGeometry geo = turning_points(params, h);
  if (geo.degenerate) return {0.0, 0.0, true};

  const double a = geo.alpha;
  const double b = geo.beta;
  const double width = b - a;
  const auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double u = a + width * s * s;
    const double g = 2.0 * potential_second_divided_difference(params, a, b, u);
    return 4.0 * width * width * s * s * c * c * poly::ipow(u, k) * std::sqrt(std::max(g, 0.0));
  };
  const quad::QuadratureResult r =
      quad::integrate(integrand, 0.0, 0.5 * std::numbers::pi, quadrature_options(opt));
  if (!r.converged) {
    throw Error(Errc::QuadratureFailure, "adaptive quadrature did not reach tolerance");
  }
  return {r.value, r.error_estimate, false};
}

double abelian_integral(const ModelParams& params, int k, double h, const AbelianOptions& opt) {
  return abelian_integral_detailed(params, k, h, opt).value;
}

AbelianResult ratio_F(const ModelParams& params, double h, const AbelianOptions& opt) {
  const int n = params.n();
  const AbelianIntegral a0 = abelian_integral_detailed(params, 0, h, opt);
  const AbelianIntegral an = abelian_integral_detailed(params, n, h, opt);

  AbelianResult r;
  r.h = h;
  r.A0 = a0.value;
  r.An = an.value;
  if (a0.degenerate) {
    r.degenerate = true;
    r.ratio = ratio_upper_bound(n);
    r.limit_speed_c0 = 1.0 / n;
    return r;
  }
  r.ratio = an.value / a0.value;
  r.limit_speed_c0 = 1.0 / (r.ratio - 1.0);
  r.quadrature_error_estimate =
      std::abs(r.ratio) * (a0.error_estimate / a0.value + an.error_estimate / an.value);
  return r;
}

HomoclinicValues homoclinic_values(const ModelParams& params) {
  const int n = params.n();
  const double nn = n;
  const double b = params.right_extent_B();
  HomoclinicValues v;
  v.J0 = b * b * special::beta(1.5, 2.0 / nn) / nn;
  v.Jn = poly::ipow(b, n + 2) * special::beta(1.5, (nn + 2.0) / nn) / nn;
  v.ratio_at_zero = ratio_lower_bound(n);
  v.ratio_at_p1 = ratio_upper_bound(n);
  return v;
}

double homoclinic_integral(const ModelParams& params, int k, const AbelianOptions& opt) {
  if (k < 0) throw Error(Errc::InvalidArgument, "power k must be nonnegative");
  const int n = params.n();
  const double b = params.right_extent_B();
  // u = B (1 - s^2): 1 - (u/B)^n = s^2 * sum_{j<n} x^j with x = 1 - s^2.
  const auto integrand = [&](double s) {
    const double x = 1.0 - s * s;
    double tail = 0.0;
    for (int j = n - 1; j >= 0; --j) tail = tail * x + 1.0;
    return poly::ipow(x, k + 1) * s * s * std::sqrt(tail);
  };
  const quad::QuadratureResult r = quad::integrate(integrand, 0.0, 1.0, quadrature_options(opt));
  return 2.0 * poly::ipow(b, k + 2) * r.value;
}

double speed_for_level(const ModelParams& params, double h, const AbelianOptions& opt) {
  return ratio_F(params, h, opt).limit_speed_c0;
}

double level_for_speed(const ModelParams& params, double c, const AbelianOptions& opt) {
  if (!(c > 0.0)) throw Error(Errc::InvalidArgument, "speed c must be positive");
  const double target = 1.0 + 1.0 / c;
  const int n = params.n();
  if (!(target > ratio_lower_bound(n) && target < ratio_upper_bound(n))) {
    throw Error(Errc::NoLevelForSpeed, "1 + 1/c lies outside the range of F_n");
  }
  const double scale = std::abs(params.p1());
  const double lo = params.p1() + 1e-8 * scale;
  const double hi = -1e-10 * scale;
  const auto f = [&](double h) { return ratio_F(params, h, opt).ratio - target; };
  try {
    return roots::bisect_secant(f, lo, hi, {1e-13, 200}, 1e-3 * scale);
  } catch (const Error& e) {
    if (e.code() == Errc::RootNotBracketed) {
      throw Error(Errc::NoLevelForSpeed, "F_n(h) - (1 + 1/c) has no sign change on the annulus");
    }
    throw;
  }
}

std::vector<double> annulus_grid(const ModelParams& params, int grid_size) {
  if (grid_size < 2) throw Error(Errc::InvalidArgument, "grid_size must be >= 2");
  const double margin = 1e-6 * std::abs(params.p1());
  const double lo = params.p1() + margin;
  const double hi = -margin;
  std::vector<double> grid(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
  }
  grid.back() = hi;
  return grid;
}

std::vector<CurvePoint> c0_curve(const ModelParams& params, int grid_size,
                                 const AbelianOptions& opt) {
  std::vector<CurvePoint> rows;
  for (double h : annulus_grid(params, grid_size)) {
    const AbelianResult r = ratio_F(params, h, opt);
    rows.push_back({h, r.A0, r.An, r.ratio, r.limit_speed_c0, r.quadrature_error_estimate});
  }
  return rows;
}

EndpointLimits extrapolated_endpoint_limits(const ModelParams& params, const AbelianOptions& opt) {
  const double scale = std::abs(params.p1());
  std::array<double, 4> hx{};
  std::array<double, 4> fy{};

  EndpointLimits out;
  for (int i = 0; i < 4; ++i) {
    hx[i] = params.p1() + scale * 1e-2 / static_cast<double>(1 << i);
    fy[i] = ratio_F(params, hx[i], opt).ratio;
  }
  out.ratio_at_p1 = quad::neville_extrapolate(hx, fy, params.p1());

  for (int i = 0; i < 4; ++i) {
    hx[i] = -scale * std::pow(10.0, -(6 + i));
    fy[i] = ratio_F(params, hx[i], opt).ratio;
  }
  out.ratio_at_zero = quad::neville_extrapolate(hx, fy, 0.0);
  return out;
}

double ratio_derivative(const ModelParams& params, double h, const AbelianOptions& opt) {
  const double step = 1e-5 * std::abs(params.p1());
  return (ratio_F(params, h + step, opt).ratio - ratio_F(params, h - step, opt).ratio) /
         (2.0 * step);
}

}  // namespace abelcycle
