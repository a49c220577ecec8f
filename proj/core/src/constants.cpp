#include "tropcurv/constants.hpp"

#include <cmath>

#include "tropcurv/errors.hpp"

namespace tropcurv {

double sphere_volume(int m) {
  if (m < 0) throw NonPositiveDimension("sphere_volume: dimension must be >= 0");
  const double two_pi = 2.0 * M_PI;
  if (m % 2 == 0) {
    // sigma_{2k} = 2 (2 pi)^k / (2k-1)!!
    int k = m / 2;
    double v = 2.0;
    for (int i = 1; i <= k; ++i) v *= two_pi / double(2 * i - 1);
    return v;
  }
  // sigma_{2k+1} = (2 pi)^{k+1} / (2k)!!
  int k = (m - 1) / 2;
  double v = two_pi;
  for (int i = 1; i <= k; ++i) v *= two_pi / double(2 * i);
  return v;
}

double a_constant(int n) {
  if (n < 0) throw NonPositiveDimension("a_constant: n must be >= 0");
  double v = 1.0;
  for (int i = 1; i <= n; ++i) v *= double(2 * i) / double(2 * i - 1);
  return v;
}

CurvatureConstants curvature_constants(int n) {
  CurvatureConstants c;
  c.n = n;
  c.sigma_n = sphere_volume(n);
  c.sigma_2n = sphere_volume(2 * n);
  c.sigma_2n_plus_1 = sphere_volume(2 * n + 1);
  c.a_n = a_constant(n);
  return c;
}

}  // namespace tropcurv
