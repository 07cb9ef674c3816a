#pragma once

#include <cstdint>
#include <random>

namespace gmix {

// Seeded random source. All sampling in the library flows through an
// explicit caller-owned instance; there is no hidden global state.
//
// The variate transforms are implemented here (rather than through
// std::*_distribution) so that a given seed produces the same stream on
// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }

  // Standard normal via Box-Muller.
  double normal();

  // Gamma(shape, rate 1) via Marsaglia-Tsang squeeze, boosted for shape < 1.
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gmix
