#pragma once

#include <functional>

namespace abelcycle::roots {

struct RootOptions {
  double x_tol = 1e-12;
  int max_iter = 200;
};

/// Safeguarded Newton iteration inside a sign-changing bracket [lo, hi].
///
/// Each Newton step is accepted only if it lands strictly inside the current
/// bracket and shrinks |f| fast enough; otherwise the step falls back to
/// bisection. Throws Error(RootNotBracketed) when f(lo) and f(hi) share a sign.
double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df,
                     double lo, double hi, const RootOptions& opt = {});

/// Bracketed bisection followed by secant polishing (derivative free).
/// Bisection runs until the bracket is narrower than `switch_width`; secant
/// steps that leave the bracket are replaced by bisection.
double bisect_secant(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& opt = {}, double switch_width = 1e-4);

}  // namespace abelcycle::roots
