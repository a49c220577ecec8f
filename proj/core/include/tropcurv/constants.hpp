#pragma once

namespace tropcurv {

/// Volume of the unit m-sphere in R^{m+1}:
///   sigma_{2k}   = 2 (2 pi)^k / (1 * 3 * ... * (2k-1))
///   sigma_{2k+1} = (2 pi)^{k+1} / (2 * 4 * ... * 2k)
/// Throws NonPositiveDimension for m < 0.
double sphere_volume(int m);

/// a_n = (2 * 4 * ... * 2n) / (1 * 3 * ... * (2n-1)) = pi * sigma_{2n} / sigma_{2n+1}.
double a_constant(int n);

/// Constant block attached to curvature reports for hypersurface dimension n.
struct CurvatureConstants {
  int n = 0;
  double sigma_n = 0;
  double sigma_2n = 0;
  double sigma_2n_plus_1 = 0;
  double a_n = 0;
};

CurvatureConstants curvature_constants(int n);

}  // namespace tropcurv
