#include "abelcycle/identities.hpp"

#include <cmath>

#include "abelcycle/error.hpp"
#include "abelcycle/polynomial.hpp"

namespace abelcycle {

namespace {

long double lpow(long double x, int k) {
  long double r = 1.0L;
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

double squared_difference_sum(int n, double u, double v) {
  double sum = 0.0;
  for (int i = 0; 2 * i <= n - 1; ++i) {
    const double d = poly::ipow(u, n - 2 * i) - poly::ipow(v, n - 2 * i);
    sum += d * d * poly::ipow(u * v, 2 * i);
  }
  return sum;
}

void require_right_branch(const ModelParams& params, double u) {
  if (!(u > params.center_u()) || !(u < params.right_extent_B())) {
    throw Error(Errc::OutsideInvolutionDomain, "u must lie in (center_u, B)");
  }
}

}  // namespace

IdentitySides identity_sides(int n, double u, double v) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  const long double lu = u;
  const long double lv = v;
  const long double uv2 = lu * lu - lv * lv;

  long double sum = 0.0L;
  for (int i = 0; 2 * i <= n - 1; ++i) {
    const long double d = lpow(lu, n - 2 * i) - lpow(lv, n - 2 * i);
    sum += d * d * lpow(lu * lv, 2 * i);
  }
  const long double lhs = uv2 * sum;
  const long double rhs = (lpow(lu, 2 * (n + 1)) - lpow(lv, 2 * (n + 1))) -
                          static_cast<long double>(n + 1) * lpow(lu, n) * lpow(lv, n) * uv2;
  const long double scale = lpow(lu, 2 * (n + 1)) + lpow(lv, 2 * (n + 1)) +
                            static_cast<long double>(n + 1) * lpow(lu, n) * lpow(lv, n) * std::fabs(uv2);
  return {static_cast<double>(lhs), static_cast<double>(rhs), static_cast<double>(scale)};
}

double identity_relative_residual(int n, double u, double v) {
  const IdentitySides s = identity_sides(n, u, v);
  return s.scale > 0.0 ? std::abs(s.lhs - s.rhs) / s.scale : 0.0;
}

double identity_residual(int n, double u, double v) {
  const IdentitySides s = identity_sides(n, u, v);
  return s.lhs - s.rhs;
}

double f_poly(int n, double u, double v) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  double result = n;
  double u_pow = 1.0;
  for (int k = n - 1; k >= 1; --k) {
    u_pow *= u;
    result = result * v + k * u_pow;
  }
  return result;
}

double positivity_certificate(const ModelParams& params, double u) {
  require_right_branch(params, u);
  const int n = params.n();
  const double v = involution(params, u);
  return f_poly(n, u, v) * potential_deriv(params, u) +
         f_poly(n, v, u) * potential_deriv(params, v);
}

double positivity_closed_form(const ModelParams& params, double u, double v) {
  const int n = params.n();
  return n / params.denom() * squared_difference_sum(n, u, v);
}

double T_n(const ModelParams& params, double u) {
  require_right_branch(params, u);
  return poly::complete_homogeneous(u, involution(params, u), params.n());
}

}  // namespace abelcycle
