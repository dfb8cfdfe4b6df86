#include "abelcycle/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "abelcycle/error.hpp"

namespace abelcycle::quad {

namespace {

GaussLegendreRule build_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute P' at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

struct Work {
  const std::function<double(double)>& f;
  const GaussLegendreRule& rule;
  const AdaptiveOptions& opt;
  /// |integral| estimate per unit length; panels get a share of the global tolerance.
  double density = 0.0;
  double width = 0.0;
  double error = 0.0;
  double magnitude = 0.0;
  int panels = 0;
  bool converged = true;
};

double refine(Work& w, double a, double b, double whole, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_legendre_panel(w.f, a, mid, w.rule);
  const double right = gauss_legendre_panel(w.f, mid, b, w.rule);
  const double halves = left + right;
  const double diff = std::abs(halves - whole);
  const double tol =
      std::max(w.opt.abs_tol, w.opt.rel_tol * std::max(std::abs(halves), w.density * (b - a)));
  // Panels whose discrepancy is negligible against the whole integral are
  // accepted as well; this terminates refinement at integrable singularities.
  const double negligible = 1e-3 * w.opt.rel_tol * w.density * w.width;
  if (diff <= tol || diff <= negligible || depth >= w.opt.max_depth || w.panels >= w.opt.max_panels) {
    if (diff > tol && diff > negligible) w.converged = false;
    w.error += diff;
    w.magnitude += std::abs(left) + std::abs(right);
    w.panels += 2;
    return halves;
  }
  return refine(w, a, mid, left, depth + 1) + refine(w, mid, b, right, depth + 1);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 1) throw Error(Errc::InvalidArgument, "Gauss-Legendre order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(order));
  return *slot;
}

double gauss_legendre_panel(const std::function<double(double)>& f, double a, double b,
                            const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double centre = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(centre + half * rule.nodes[i]);
  }
  return half * sum;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const AdaptiveOptions& opt) {
  const auto& rule = gauss_legendre(opt.order);
  Work w{f, rule, opt};
  const double whole = gauss_legendre_panel(f, a, b, rule);
  w.width = std::abs(b - a);
  w.density = std::abs(whole) / w.width;
  QuadratureResult r;
  r.value = refine(w, a, b, whole, 0);
  constexpr double kRounding = 64.0 * std::numeric_limits<double>::epsilon();
  r.error_estimate = w.error + kRounding * w.magnitude;
  r.panels = w.panels;
  r.converged = w.converged;
  if (!std::isfinite(r.value)) {
    throw Error(Errc::QuadratureFailure, "non-finite integrand value");
  }
  return r;
}

double trapezoid(const std::function<double(double)>& f, double a, double b, long panels) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.5 * (f(a) + f(b));
  for (long i = 1; i < panels; ++i) sum += f(a + h * static_cast<double>(i));
  return h * sum;
}

double neville_extrapolate(std::span<const double> x, std::span<const double> y, double target) {
  if (x.size() != y.size() || x.empty()) {
    throw Error(Errc::InvalidArgument, "neville_extrapolate: mismatched or empty samples");
  }
  std::vector<double> p(y.begin(), y.end());
  const std::size_t m = x.size();
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = 0; i + level < m; ++i) {
      const double xi = x[i];
      const double xj = x[i + level];
      p[i] = ((target - xj) * p[i] + (xi - target) * p[i + 1]) / (xi - xj);
    }
  }
  return p[0];
}

}  // namespace abelcycle::quad
