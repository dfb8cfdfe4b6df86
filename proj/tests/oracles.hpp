#pragma once

// Reference computations written independently of the library, shared by the
// unit and acceptance tests.

#include <algorithm>
#include <cmath>

#include "abelcycle/quadrature.hpp"

namespace abelcycle::oracle {

// Reference potential written out independently of the library.
inline double phi_ref(int n, double u) {
  return -0.5 * u * u + std::pow(u, n + 2) / ((n + 1.0) * (n + 2.0));
}

// Plain bisection on one monotone branch.
inline double bisect_ref(int n, double h, double lo, double hi) {
  const bool increasing = phi_ref(n, hi) > phi_ref(n, lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const bool above = phi_ref(n, mid) > h;
    if (above == increasing) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Brute-force oracle: trapezoid rule on `panels` panels of 2 u^k sqrt(2(h - Phi)) in u,
// clipping the radicand at zero near the turning points.
inline double brute_force_abelian(int n, int k, double h, long panels) {
  const double center = std::pow(n + 1.0, 1.0 / n);
  const double b = std::pow((n + 1.0) * (n + 2.0) / 2.0, 1.0 / n);
  const double alpha = bisect_ref(n, h, 0.0, center);
  const double beta = bisect_ref(n, h, center, b);
  const auto f = [&](double u) {
    return 2.0 * std::pow(u, k) * std::sqrt(std::max(0.0, 2.0 * (h - phi_ref(n, u))));
  };
  return quad::trapezoid(f, alpha, beta, panels);
}

inline double brute_force_homoclinic(int n, int k, long panels) {
  const double b = std::pow((n + 1.0) * (n + 2.0) / 2.0, 1.0 / n);
  const auto f = [&](double u) {
    return std::pow(u, k + 1) *
           std::sqrt(std::max(0.0, 1.0 - 2.0 * std::pow(u, n) / ((n + 1.0) * (n + 2.0))));
  };
  return quad::trapezoid(f, 0.0, b, panels);
}

}  // namespace abelcycle::oracle
