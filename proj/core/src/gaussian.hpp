#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tropcurv::internal {

// Deterministic standard-normal sampler: Box-Muller over the raw mt19937_64
// stream, independent of library distribution implementations.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = ((eng_() >> 11) + 1) * 0x1p-53;  // (0, 1]
    double u2 = (eng_() >> 11) * 0x1p-53;        // [0, 1)
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0;
  bool have_ = false;
};

}  // namespace tropcurv::internal
