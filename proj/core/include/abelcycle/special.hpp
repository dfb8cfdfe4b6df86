#pragma once

namespace abelcycle::special {

/// ln B(p, q) for p, q > 0, via log-Gamma.
double log_beta(double p, double q);

/// Euler Beta function B(p, q) = Γ(p)Γ(q)/Γ(p+q) for p, q > 0.
double beta(double p, double q);

/// Root x^(1/n) for x > 0 evaluated as exp(ln(x)/n).
double nth_root(double x, int n);

}  // namespace abelcycle::special
