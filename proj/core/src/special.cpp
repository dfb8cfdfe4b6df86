#include "abelcycle/special.hpp"

#include <cmath>

#include "abelcycle/error.hpp"

namespace abelcycle::special {

double log_beta(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) {
    throw Error(Errc::InvalidArgument, "Beta function needs positive arguments");
  }
  return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

double beta(double p, double q) { return std::exp(log_beta(p, q)); }

double nth_root(double x, int n) {
  if (!(x > 0.0) || n < 1) throw Error(Errc::InvalidArgument, "nth_root needs x > 0, n >= 1");
  return std::exp(std::log(x) / n);
}

}  // namespace abelcycle::special
