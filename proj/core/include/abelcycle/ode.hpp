#pragma once

// Embedded Dormand–Prince 5(4) integrator with PI step-size control and the
// 4th-order continuous extension of Hairer, Norsett & Wanner.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>

#include "abelcycle/error.hpp"

namespace abelcycle::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  /// 0 selects the automatic initial step.
  double initial_step = 0.0;
  double max_step = std::numeric_limits<double>::infinity();
  /// When positive, disables adaptivity and takes steps of exactly this size
  /// (the last step is shortened to land on t_end).
  double fixed_step = 0.0;
  long max_steps = 50'000'000;
};

struct StepStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_evaluations = 0;
};

/// One accepted step [t0, t0 + h] with its dense-output polynomial.
template <std::size_t N>
class DenseStep {
 public:
  double t0 = 0.0;
  double h = 0.0;
  State<N> y0{};
  State<N> y1{};

  double t1() const noexcept { return t0 + h; }

  /// Interpolated state at t in [t0, t0 + h].
  State<N> operator()(double t) const noexcept {
    const double s = (t - t0) / h;
    const double s1 = 1.0 - s;
    State<N> out;
    for (std::size_t i = 0; i < N; ++i) {
      out[i] = r1[i] + s * (r2[i] + s1 * (r3[i] + s * (r4[i] + s1 * r5[i])));
    }
    return out;
  }

  /// Single interpolated component, cheaper for event functions.
  double component(std::size_t i, double t) const noexcept {
    const double s = (t - t0) / h;
    const double s1 = 1.0 - s;
    return r1[i] + s * (r2[i] + s1 * (r3[i] + s * (r4[i] + s1 * r5[i])));
  }

  State<N> r1{}, r2{}, r3{}, r4{}, r5{};
};

template <std::size_t N>
class DormandPrince54 {
 public:
  using Rhs = std::function<State<N>(double, const State<N>&)>;
  /// Called after every accepted step; returning false stops integration.
  using Observer = std::function<bool(const DenseStep<N>&)>;

  DormandPrince54(Rhs rhs, IntegratorOptions options)
      : rhs_(std::move(rhs)), opt_(options) {}

  const IntegratorOptions& options() const noexcept { return opt_; }

  /// Integrates from (t0, y0) towards t_end (> t0). Returns the final time
  /// reached, which is t_end unless the observer stopped early.
  double integrate(double t0, const State<N>& y0, double t_end, const Observer& observer,
                   StepStats* stats = nullptr) const {
    StepStats local;
    StepStats& st = stats ? *stats : local;
    double t = t0;
    State<N> y = y0;
    State<N> k1 = eval(t, y, st);
    double h = opt_.fixed_step > 0.0 ? opt_.fixed_step
               : opt_.initial_step > 0.0 ? opt_.initial_step
                                          : initial_step(t, y, k1, t_end - t0, st);
    double err_old = 1e-4;
    bool rejected_last = false;
    DenseStep<N> step;

    for (long count = 0; t < t_end; ++count) {
      if (count >= opt_.max_steps) {
        throw Error(Errc::StepSizeUnderflow, "maximum number of steps exceeded");
      }
      h = std::min(h, opt_.max_step);
      bool last = false;
      // Fixed steps absorb a rounding remainder instead of taking a sliver step.
      const double slack = opt_.fixed_step > 0.0 ? 1e-9 * h : 0.0;
      if (t + h + slack >= t_end) {
        h = t_end - t;
        last = true;
      }
      if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
        throw Error(Errc::StepSizeUnderflow, "step size underflow");
      }

      std::array<State<N>, 7> k;
      k[0] = k1;
      State<N> y_new;
      State<N> err_vec;
      stages(t, y, h, k, y_new, err_vec, st);

      if (opt_.fixed_step > 0.0) {
        accept(t, y, h, k, y_new, step);
        ++st.accepted;
        t = last ? t_end : t + h;
        y = y_new;
        k1 = k[6];
        if (observer && !observer(step)) return t;
        h = opt_.fixed_step;
        continue;
      }

      const double err = error_norm(y, y_new, err_vec);
      if (!std::isfinite(err)) {
        h *= 0.2;
        ++st.rejected;
        rejected_last = true;
        continue;
      }
      constexpr double kBeta = 0.04;
      constexpr double kExpo = 0.2 - kBeta * 0.75;
      constexpr double kSafety = 0.9;
      if (err <= 1.0) {
        double fac = std::pow(std::max(err, 1e-10), kExpo) / std::pow(err_old, kBeta);
        fac = std::clamp(fac / kSafety, 0.1, 5.0);
        double h_next = h / fac;
        if (rejected_last) h_next = std::min(h_next, h);
        err_old = std::max(err, 1e-4);

        accept(t, y, h, k, y_new, step);
        ++st.accepted;
        t = last ? t_end : t + h;
        y = y_new;
        k1 = k[6];
        rejected_last = false;
        if (observer && !observer(step)) return t;
        h = h_next;
      } else {
        const double fac = std::clamp(std::pow(err, kExpo) / kSafety, 1.0, 5.0);
        h /= fac;
        ++st.rejected;
        rejected_last = true;
      }
    }
    return t;
  }

  /// One unconditional step of size h from (t, y); returns the 5th-order state.
  State<N> single_step(double t, const State<N>& y, double h) const {
    StepStats st;
    std::array<State<N>, 7> k;
    k[0] = eval(t, y, st);
    State<N> y_new;
    State<N> err_vec;
    stages(t, y, h, k, y_new, err_vec, st);
    return y_new;
  }

  State<N> rhs(double t, const State<N>& y) const { return rhs_(t, y); }

 private:
  State<N> eval(double t, const State<N>& y, StepStats& st) const {
    ++st.rhs_evaluations;
    return rhs_(t, y);
  }

  void stages(double t, const State<N>& y, double h, std::array<State<N>, 7>& k,
              State<N>& y_new, State<N>& err_vec, StepStats& st) const {
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                     a75 = -2187.0 / 6784, a76 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    State<N> tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k[0][i];
    k[1] = eval(t + c2 * h, tmp, st);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k[0][i] + a32 * k[1][i]);
    k[2] = eval(t + c3 * h, tmp, st);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]);
    k[3] = eval(t + c4 * h, tmp, st);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] + a54 * k[3][i]);
    k[4] = eval(t + c5 * h, tmp, st);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] + a64 * k[3][i] +
                           a65 * k[4][i]);
    k[5] = eval(t + h, tmp, st);
    for (std::size_t i = 0; i < N; ++i)
      y_new[i] = y[i] + h * (a71 * k[0][i] + a73 * k[2][i] + a74 * k[3][i] + a75 * k[4][i] +
                             a76 * k[5][i]);
    k[6] = eval(t + h, y_new, st);
    for (std::size_t i = 0; i < N; ++i)
      err_vec[i] = h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] +
                        e6 * k[5][i] + e7 * k[6][i]);
  }

  double error_norm(const State<N>& y0, const State<N>& y1, const State<N>& e) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opt_.atol + opt_.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      const double r = e[i] / sc;
      sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(N));
  }

  static void accept(double t, const State<N>& y, double h, const std::array<State<N>, 7>& k,
                     const State<N>& y_new, DenseStep<N>& step) {
    constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                     d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                     d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;
    step.t0 = t;
    step.h = h;
    step.y0 = y;
    step.y1 = y_new;
    for (std::size_t i = 0; i < N; ++i) {
      const double ydiff = y_new[i] - y[i];
      const double bspl = h * k[0][i] - ydiff;
      step.r1[i] = y[i];
      step.r2[i] = ydiff;
      step.r3[i] = bspl;
      step.r4[i] = ydiff - h * k[6][i] - bspl;
      step.r5[i] = h * (d1 * k[0][i] + d3 * k[2][i] + d4 * k[3][i] + d5 * k[4][i] +
                        d6 * k[5][i] + d7 * k[6][i]);
    }
  }

  double initial_step(double t, const State<N>& y, const State<N>& f0, double span,
                      StepStats& st) const {
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opt_.atol + opt_.rtol * std::abs(y[i]);
      d0 += (y[i] / sc) * (y[i] / sc);
      d1 += (f0[i] / sc) * (f0[i] / sc);
    }
    d0 = std::sqrt(d0 / N);
    d1 = std::sqrt(d1 / N);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, span);
    State<N> y1;
    for (std::size_t i = 0; i < N; ++i) y1[i] = y[i] + h0 * f0[i];
    const State<N> f1 = eval(t + h0, y1, st);
    double d2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opt_.atol + opt_.rtol * std::abs(y[i]);
      d2 += ((f1[i] - f0[i]) / sc) * ((f1[i] - f0[i]) / sc);
    }
    d2 = std::sqrt(d2 / N) / h0;
    const double dmax = std::max(d1, d2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
    return std::min({100.0 * h0, h1, span, opt_.max_step});
  }

  Rhs rhs_;
  IntegratorOptions opt_;
};

}  // namespace abelcycle::ode
