#include <cmath>

#include "doctest.h"
#include "tropcurv/constants.hpp"
#include "tropcurv/errors.hpp"

using namespace tropcurv;

namespace {

// Independent reference: surface area of the unit m-sphere via the Gamma
// function, sigma_m = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
double sigma_gamma(int m) {
  const double h = (m + 1) / 2.0;
  return 2.0 * std::pow(M_PI, h) / std::tgamma(h);
}

}  // namespace

TEST_CASE("sphere volumes match the Gamma-function formula") {
  for (int m = 0; m <= 9; ++m) {
    CAPTURE(m);
    CHECK(sphere_volume(m) == doctest::Approx(sigma_gamma(m)).epsilon(1e-13));
  }
}

TEST_CASE("sphere volumes match the closed forms in low dimension") {
  CHECK(sphere_volume(0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sphere_volume(1) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
  CHECK(sphere_volume(2) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
  CHECK(sphere_volume(3) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-15));
  CHECK(sphere_volume(4) == doctest::Approx(8.0 * M_PI * M_PI / 3.0).epsilon(1e-15));
  CHECK(sphere_volume(5) == doctest::Approx(std::pow(M_PI, 3)).epsilon(1e-15));
}

TEST_CASE("negative sphere dimension is rejected") {
  CHECK_THROWS_AS(sphere_volume(-1), NonPositiveDimension);
}

TEST_CASE("a_n equals pi sigma_2n / sigma_{2n+1} and the rational values") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const double expected = M_PI * sigma_gamma(2 * n) / sigma_gamma(2 * n + 1);
    CHECK(a_constant(n) == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(a_constant(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(a_constant(2) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(a_constant(3) == doctest::Approx(16.0 / 5.0).epsilon(1e-15));
}

TEST_CASE("curvature constant block is self-consistent") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const CurvatureConstants k = curvature_constants(n);
    CHECK(k.n == n);
    CHECK(k.sigma_n == sphere_volume(n));
    CHECK(k.sigma_2n == sphere_volume(2 * n));
    CHECK(k.sigma_2n_plus_1 == sphere_volume(2 * n + 1));
    CHECK(k.a_n == a_constant(n));
  }
}
