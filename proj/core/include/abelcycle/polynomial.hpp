#pragma once

namespace abelcycle::poly {

/// x^k for k >= 0 by repeated squaring.
inline double ipow(double x, int k) {
  double result = 1.0;
  double base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

/// Complete homogeneous symmetric polynomial of degree m in (a, b):
/// sum_{j=0}^{m} a^j b^(m-j).
inline double complete_homogeneous(double a, double b, int m) {
  double h = 1.0;
  for (int k = 1; k <= m; ++k) h = h * b + ipow(a, k);
  return h;
}

/// Complete homogeneous symmetric polynomial of degree m in (a, b, c).
inline double complete_homogeneous(double a, double b, double c, int m) {
  // h_k(a,b,c) = h_k(a,b) + c * h_{k-1}(a,b,c)
  double two = 1.0;
  double three = 1.0;
  double a_pow = 1.0;
  for (int k = 1; k <= m; ++k) {
    a_pow *= a;
    two = two * b + a_pow;
    three = two + c * three;
  }
  return three;
}

}  // namespace abelcycle::poly
