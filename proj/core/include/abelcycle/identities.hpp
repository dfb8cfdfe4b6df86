#pragma once

#include "abelcycle/hamiltonian.hpp"

namespace abelcycle {

/// Both sides of the polynomial identity
///   (u^2 - v^2) * sum_{i=0}^{floor((n-1)/2)} (u^(n-2i) - v^(n-2i))^2 (uv)^(2i)
///     = (u^(2(n+1)) - v^(2(n+1))) - (n+1) u^n v^n (u^2 - v^2),
/// evaluated in extended precision.
struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  /// Sum of the magnitudes of the terms combined on the right-hand side.
  /// Near u = v the sides cancel to O((u - v)^3), so residuals are measured
  /// against this scale rather than against |rhs|.
  double scale = 0.0;
};

IdentitySides identity_sides(int n, double u, double v);

/// lhs - rhs of the identity above; zero for every real u, v.
double identity_residual(int n, double u, double v);

/// |lhs - rhs| / scale; zero when both u and v vanish.
double identity_relative_residual(int n, double u, double v);

/// f_n(u, v) = sum_{k=1}^{n} k v^(k-1) u^(n-k), Horner form in v.
double f_poly(int n, double u, double v);

/// f_n(u,v) Phi'(u) + f_n(v,u) Phi'(v) with v = delta(u). Requires
/// center_u < u < B.
double positivity_certificate(const ModelParams& params, double u);

/// n/((n+1)(n+2)) * sum_i (u^(n-2i) - v^(n-2i))^2 (uv)^(2i); equals the
/// certificate whenever Phi(u) = Phi(v).
double positivity_closed_form(const ModelParams& params, double u, double v);

/// T_n(u) = u^n + u^(n-1) v + ... + v^n with v = delta(u). Requires
/// center_u < u < B.
double T_n(const ModelParams& params, double u);

}  // namespace abelcycle
