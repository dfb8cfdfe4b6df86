#include "abelcycle/verify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "abelcycle/dynamics.hpp"
#include "abelcycle/hamiltonian.hpp"
#include "abelcycle/identities.hpp"

namespace abelcycle::verify {

namespace {

/// Tracks the worst value of a quantity together with where it occurred.
struct Worst {
  double value = 0.0;
  std::string where;

  void update(double v, const std::string& at) {
    if (!(v <= value)) {
      value = v;
      where = at;
    }
  }
};

PropertyResult finish(std::string name, const Worst& w, double tol, bool passed) {
  PropertyResult r;
  r.name = std::move(name);
  r.worst = w.value;
  r.tolerance = tol;
  r.passed = passed;
  r.detail = w.where;
  return r;
}

std::string at_n(int n) { return "n=" + std::to_string(n); }

std::string at_n_x(int n, const char* label, double x) {
  std::ostringstream os;
  os.precision(10);
  os << "n=" << n << ' ' << label << '=' << x;
  return os.str();
}

}  // namespace

double involution_n1_closed_form(double u) {
  const double disc = 9.0 + 6.0 * u - 3.0 * u * u;
  return 0.5 * ((3.0 - u) + std::sqrt(disc));
}

PropertyResult check_identity(const VerifyOptions& o) {
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  Worst w;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    for (int i = 0; i < o.random_samples; ++i) {
      const double u = dist(rng);
      const double v = dist(rng);
      w.update(identity_relative_residual(n, u, v), at_n_x(n, "u", u));
    }
  }
  return finish("identity_residual", w, kTol, w.value <= kTol);
}

PropertyResult check_involution(const VerifyOptions& o) {
  constexpr double kPhiTol = 1e-10;
  constexpr double kIdemTol = 1e-8;
  constexpr double kClosedTol = 1e-10;
  constexpr int kGrid = 200;
  Worst phi_gap, idem, closed;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const double b = m.right_extent_B();
    for (int i = 1; i <= kGrid; ++i) {
      const double u = b * i / (kGrid + 1.0);
      const double v = involution(m, u);
      phi_gap.update(std::abs(potential(m, v) - potential(m, u)), at_n_x(n, "u", u));
      idem.update(std::abs(involution(m, v) - u), at_n_x(n, "u", u));
      if (n == 1) closed.update(std::abs(v - involution_n1_closed_form(u)), at_n_x(n, "u", u));
    }
  }
  const bool ok = phi_gap.value <= kPhiTol && idem.value <= kIdemTol && closed.value <= kClosedTol;
  PropertyResult r = finish("involution", idem, kIdemTol, ok);
  std::ostringstream os;
  os.precision(3);
  os << "max|Phi(d(u))-Phi(u)|=" << phi_gap.value << " max|d(d(u))-u|=" << idem.value;
  if (o.n_min <= 1) os << " n=1 closed-form gap=" << closed.value;
  r.detail = os.str();
  return r;
}

PropertyResult check_potential_branches(const VerifyOptions& o) {
  constexpr int kGrid = 1000;
  int violations = 0;
  Worst w;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const double c = m.center_u();
    const double b = m.right_extent_B();
    for (int i = 1; i < kGrid; ++i) {
      const double left = c * i / kGrid;
      const double right = c + (b - c) * i / kGrid;
      if (!(potential_deriv(m, left) < 0.0)) {
        ++violations;
        w.update(1.0, at_n_x(n, "u", left));
      }
      if (!(potential_deriv(m, right) > 0.0)) {
        ++violations;
        w.update(1.0, at_n_x(n, "u", right));
      }
    }
  }
  PropertyResult r = finish("potential_monotone_branches", w, 0.0, violations == 0);
  r.worst = violations;
  return r;
}

PropertyResult check_fixed_points(const VerifyOptions& o) {
  int mismatches = 0;
  Worst w;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const auto fps = fixed_points(m);
    const std::size_t expected = (n % 2 == 0) ? 3 : 2;
    if (fps.size() != expected) {
      ++mismatches;
      w.update(1.0, at_n(n));
    }
    for (const auto& fp : fps) {
      const double det = hessian_determinant(m, fp.u);
      const bool saddle = det < 0.0;
      if (saddle != (fp.kind == FixedPointKind::Saddle) || std::abs(vector_field_reduced(
              PerturbedParams(m, 0.0, 1.0), fp.u, fp.y).y) > 1e-12) {
        ++mismatches;
        w.update(1.0, at_n_x(n, "u", fp.u));
      }
    }
  }
  PropertyResult r = finish("fixed_point_classification", w, 0.0, mismatches == 0);
  r.worst = mismatches;
  return r;
}

PropertyResult check_turning_point_nesting(const VerifyOptions& o) {
  int violations = 0;
  Worst w;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const auto grid = annulus_grid(m, o.grid);
    LevelCurveGeometry prev = turning_points(m, grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const LevelCurveGeometry g = turning_points(m, grid[i]);
      if (!(g.alpha < prev.alpha && g.beta > prev.beta)) {
        ++violations;
        w.update(1.0, at_n_x(n, "h", grid[i]));
      }
      prev = g;
    }
  }
  PropertyResult r = finish("turning_point_nesting", w, 0.0, violations == 0);
  r.worst = violations;
  return r;
}

PropertyResult check_ratio_monotonicity(const VerifyOptions& o) {
  // Worst = largest forward difference of F (must stay negative) and
  // smallest forward difference of c0 (must stay positive), reported as
  // max(dF, -dc0).
  Worst w;
  w.value = -std::numeric_limits<double>::infinity();
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const auto rows = c0_curve(m, o.grid, o.quadrature);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double d_ratio = rows[i].ratio - rows[i - 1].ratio;
      const double d_c0 = rows[i].c0 - rows[i - 1].c0;
      w.update(std::max(d_ratio, -d_c0), at_n_x(n, "h", rows[i].h));
    }
  }
  return finish("ratio_strictly_decreasing_c0_increasing", w, 0.0, w.value < 0.0);
}

PropertyResult check_ratio_bounds(const VerifyOptions& o) {
  int violations = 0;
  Worst w;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const double lo = ratio_lower_bound(n);
    const double hi = ratio_upper_bound(n);
    const double c_lo = 1.0 / n;
    const double c_hi = (3.0 * n + 4.0) / (2.0 * n * n + 3.0 * n);
    for (const auto& row : c0_curve(m, o.grid, o.quadrature)) {
      const bool ok = row.ratio > lo && row.ratio < hi && row.c0 > c_lo && row.c0 < c_hi &&
                      row.A0 > 0.0;
      if (!ok) {
        ++violations;
        w.update(1.0, at_n_x(n, "h", row.h));
      }
    }
  }
  PropertyResult r = finish("ratio_and_speed_bounds", w, 0.0, violations == 0);
  r.worst = violations;
  return r;
}

PropertyResult check_endpoint_limits(const VerifyOptions& o) {
  constexpr double kTol = 1e-3;
  Worst w;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const EndpointLimits lim = extrapolated_endpoint_limits(m, o.quadrature);
    w.update(std::abs(lim.ratio_at_p1 - ratio_upper_bound(n)), at_n(n) + " at p1");
    w.update(std::abs(lim.ratio_at_zero - ratio_lower_bound(n)), at_n(n) + " at 0");
  }
  return finish("ratio_endpoint_limits", w, kTol, w.value <= kTol);
}

PropertyResult check_beta_consistency(const VerifyOptions& o) {
  constexpr double kRatioTol = 1e-10;
  constexpr double kQuadTol = 1e-8;
  Worst ratio_gap, quad_gap;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const HomoclinicValues hv = homoclinic_values(m);
    ratio_gap.update(std::abs(hv.Jn / hv.J0 - hv.ratio_at_zero), at_n(n));
    const double j0 = homoclinic_integral(m, 0, o.quadrature);
    const double jn = homoclinic_integral(m, n, o.quadrature);
    quad_gap.update(std::abs(j0 - hv.J0) / hv.J0, at_n(n) + " k=0");
    quad_gap.update(std::abs(jn - hv.Jn) / hv.Jn, at_n(n) + " k=n");
  }
  PropertyResult r = finish("beta_closed_forms", ratio_gap, kRatioTol,
                            ratio_gap.value <= kRatioTol && quad_gap.value <= kQuadTol);
  std::ostringstream os;
  os.precision(3);
  os << "max|Jn/J0-ratio|=" << ratio_gap.value << " max quadrature rel gap=" << quad_gap.value;
  r.detail = os.str();
  return r;
}

PropertyResult check_positivity_certificate(const VerifyOptions& o) {
  constexpr double kTol = 1e-8;
  constexpr int kGrid = 200;
  Worst rel;
  int nonpositive = 0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const double c = m.center_u();
    const double b = m.right_extent_B();
    for (int i = 1; i <= kGrid; ++i) {
      const double u = c + (b - c) * i / (kGrid + 1.0);
      const double cert = positivity_certificate(m, u);
      const double closed = positivity_closed_form(m, u, involution(m, u));
      if (!(cert > 0.0)) ++nonpositive;
      rel.update(std::abs(cert - closed) / std::abs(closed), at_n_x(n, "u", u));
    }
  }
  return finish("positivity_certificate", rel, kTol, nonpositive == 0 && rel.value <= kTol);
}

PropertyResult check_T_monotonicity(const VerifyOptions& o) {
  constexpr int kGrid = 500;
  Worst w;
  w.value = -std::numeric_limits<double>::infinity();
  int sign_mismatch = 0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    const double c = m.center_u();
    const double b = m.right_extent_B();
    double prev = T_n(m, c + (b - c) / (kGrid + 1.0));
    for (int i = 2; i <= kGrid; ++i) {
      const double u = c + (b - c) * i / (kGrid + 1.0);
      const double t = T_n(m, u);
      w.update(t - prev, at_n_x(n, "u", u));
      // T_n' < 0 must hold wherever Phi'(delta(u)) < 0, i.e. everywhere here.
      if (potential_deriv(m, involution(m, u)) < 0.0 && !(t - prev < 0.0)) ++sign_mismatch;
      prev = t;
    }
  }
  return finish("T_n_strictly_decreasing", w, 0.0, w.value < 0.0 && sign_mismatch == 0);
}

PropertyResult check_green_area(const VerifyOptions& o) {
  constexpr double kTol = 1e-4;
  Worst w;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const ModelParams m(n);
    for (double frac : {0.25, 0.5, 0.75}) {
      const double h = m.p1() * frac;
      const double a0 = abelian_integral(m, 0, h, o.quadrature);
      const auto orbit = trace_unperturbed_orbit(m, h, 20000, o.ode);
      const double area = std::abs(polygon_area(orbit));
      w.update(std::abs(area - a0) / a0, at_n_x(n, "h", h));
    }
  }
  return finish("green_area_crosscheck", w, kTol, w.value <= kTol);
}

std::vector<PropertyResult> run_all(const VerifyOptions& o) {
  std::vector<PropertyResult> out;
  out.push_back(check_identity(o));
  out.push_back(check_involution(o));
  out.push_back(check_potential_branches(o));
  out.push_back(check_fixed_points(o));
  out.push_back(check_turning_point_nesting(o));
  out.push_back(check_ratio_monotonicity(o));
  out.push_back(check_ratio_bounds(o));
  out.push_back(check_endpoint_limits(o));
  out.push_back(check_beta_consistency(o));
  out.push_back(check_positivity_certificate(o));
  out.push_back(check_T_monotonicity(o));
  if (o.include_area_check) out.push_back(check_green_area(o));
  return out;
}

}  // namespace abelcycle::verify
