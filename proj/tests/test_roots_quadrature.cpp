#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "abelcycle/error.hpp"
#include "abelcycle/quadrature.hpp"
#include "abelcycle/roots.hpp"
#include "abelcycle/special.hpp"

using namespace abelcycle;
using doctest::Approx;

TEST_CASE("newton_bisect converges on a monotone bracket") {
  const auto f = [](double x) { return x * x * x - 2.0; };
  const auto df = [](double x) { return 3.0 * x * x; };
  CHECK(roots::newton_bisect(f, df, 0.0, 2.0) == Approx(std::cbrt(2.0)).epsilon(1e-14));
  // A vanishing derivative at the bracket end must not derail the iteration.
  const auto g = [](double x) { return (x - 1.0) * (x - 1.0) - 0.25; };
  const auto dg = [](double x) { return 2.0 * (x - 1.0); };
  CHECK(roots::newton_bisect(g, dg, 1.0, 3.0) == Approx(1.5).epsilon(1e-14));
  CHECK_THROWS_AS(roots::newton_bisect(f, df, 2.0, 3.0), Error);
}

TEST_CASE("bisect_secant converges without derivatives") {
  const auto f = [](double x) { return std::cos(x) - x; };
  CHECK(roots::bisect_secant(f, 0.0, 1.0) == Approx(0.7390851332151607).epsilon(1e-14));
  try {
    roots::bisect_secant(f, 1.0, 2.0);
    FAIL("expected RootNotBracketed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RootNotBracketed);
  }
}

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int order : {1, 2, 5, 16, 33}) {
    const auto& rule = quad::gauss_legendre(order);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == Approx(2.0).epsilon(1e-14));
    for (int p = 0; p <= 2 * order - 1; ++p) {
      const double exact = (p % 2 == 1) ? 0.0 : 2.0 / (p + 1);
      const double got =
          quad::gauss_legendre_panel([p](double x) { return std::pow(x, p); }, -1.0, 1.0, rule);
      CHECK(got == Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("adaptive quadrature handles boundary layers") {
  const auto f = [](double x) { return std::sqrt(x); };
  const auto r = quad::integrate(f, 0.0, 1.0, {16, 1e-13});
  CHECK(r.value == Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0 / 3.0) <= r.error_estimate + 1e-15);

  const auto smooth = quad::integrate([](double x) { return std::exp(-x * x); }, 0.0, 3.0);
  CHECK(smooth.value == Approx(0.5 * std::sqrt(std::numbers::pi) * std::erf(3.0)).epsilon(1e-14));
}

TEST_CASE("trapezoid converges quadratically") {
  const auto f = [](double x) { return x * x; };
  CHECK(quad::trapezoid(f, 0.0, 1.0, 1000) == Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("Neville extrapolation reproduces polynomials") {
  const std::array<double, 4> x{0.1, 0.2, 0.4, 0.8};
  std::array<double, 4> y{};
  for (std::size_t i = 0; i < 4; ++i) y[i] = 2.0 - 3.0 * x[i] + x[i] * x[i] * x[i];
  CHECK(quad::neville_extrapolate(x, y, 0.0) == Approx(2.0).epsilon(1e-13));
}

TEST_CASE("Beta function") {
  CHECK(special::beta(1.0, 1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(special::beta(1.5, 2.0) == Approx(4.0 / 15.0).epsilon(1e-14));
  CHECK(special::beta(0.5, 0.5) == Approx(std::numbers::pi).epsilon(1e-14));
  // B(3/2, 2/n) against direct quadrature of x^(1/2) (1-x)^(2/n - 1) with x = 1 - s^q.
  for (int n : {3, 7}) {
    const double q = 2.0 / n;
    const auto g = [q](double t) {
      // x = 1 - t^(1/q) removes the endpoint singularity at x = 1.
      const double x = 1.0 - std::pow(t, 1.0 / q);
      return std::sqrt(x) / q;
    };
    const double direct = quad::integrate(g, 0.0, 1.0, {16, 1e-14}).value;
    CHECK(special::beta(1.5, q) == Approx(direct).epsilon(1e-12));
  }
  CHECK_THROWS_AS(special::beta(0.0, 1.0), Error);
  CHECK(special::nth_root(32.0, 5) == Approx(2.0).epsilon(1e-15));
}
