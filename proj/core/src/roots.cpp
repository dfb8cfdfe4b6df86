#include "abelcycle/roots.hpp"

#include <cmath>
#include <utility>

#include "abelcycle/error.hpp"

namespace abelcycle::roots {

namespace {

bool same_sign(double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

}  // namespace

double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df,
                     double lo, double hi, const RootOptions& opt) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (same_sign(flo, fhi)) {
    throw Error(Errc::RootNotBracketed, "newton_bisect: f(lo) and f(hi) have the same sign");
  }

  double x = 0.5 * (lo + hi);
  double dx_old = hi - lo;
  double dx = dx_old;
  double fx = f(x);
  for (int it = 0; it < opt.max_iter; ++it) {
    if (fx == 0.0) return x;
    if (same_sign(fx, flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }

    const double d = df(x);
    const double x_newton = (d != 0.0) ? x - fx / d : lo - 1.0;
    if (d != 0.0 && std::abs(fx / d) <= opt.x_tol && x_newton >= lo && x_newton <= hi) {
      return x_newton;
    }
    const bool inside = x_newton > lo && x_newton < hi;
    const bool fast = std::abs(2.0 * fx) < std::abs(dx_old * d);
    dx_old = dx;
    if (inside && fast) {
      dx = x_newton - x;
      x = x_newton;
    } else {
      dx = 0.5 * (hi - lo);
      x = lo + dx;
    }
    fx = f(x);
    if (std::abs(dx) <= opt.x_tol || hi - lo <= opt.x_tol) break;
  }
  // Final Newton polish; bisection termination alone leaves an O(x_tol) residual.
  for (int it = 0; it < 3 && fx != 0.0; ++it) {
    const double d = df(x);
    if (d == 0.0) break;
    const double x_next = x - fx / d;
    if (!(x_next >= lo && x_next <= hi)) break;
    const double f_next = f(x_next);
    if (!(std::abs(f_next) < std::abs(fx))) break;
    x = x_next;
    fx = f_next;
  }
  return x;
}

double bisect_secant(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& opt, double switch_width) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (same_sign(flo, fhi)) {
    throw Error(Errc::RootNotBracketed, "bisect_secant: f(lo) and f(hi) have the same sign");
  }

  int it = 0;
  while (hi - lo > switch_width && it < opt.max_iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (same_sign(fm, flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    ++it;
  }

  // Secant on the two most recent iterates, safeguarded by the bracket.
  double x0 = lo, f0 = flo;
  double x1 = hi, f1 = fhi;
  for (; it < opt.max_iter; ++it) {
    double x = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x > lo && x < hi) || !std::isfinite(x)) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (same_sign(fx, flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double step = std::abs(x - x1);
    x0 = x1;
    f0 = f1;
    x1 = x;
    f1 = fx;
    if (step <= opt.x_tol || hi - lo <= opt.x_tol) return x;
  }
  return x1;
}

}  // namespace abelcycle::roots
