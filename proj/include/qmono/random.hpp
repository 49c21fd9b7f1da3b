#pragma once

#include <cstdint>

#include "qmono/states.hpp"

namespace qmono {

/// splitmix64 stream with a hand-rolled Box-Muller transform.
/// Fully deterministic for a fixed seed, independent of platform and
/// standard-library distribution internals.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal.
  double gaussian();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Unit vector drawn Haar-uniformly: normalized complex standard normals.
PureState haar_random_pure(std::vector<std::size_t> dims, std::uint64_t seed);

/// Haar unitary via Gram-Schmidt of a complex Gaussian matrix.
ComplexMatrix haar_random_unitary(std::size_t dim, Prng& rng);

/// Gaussian dim x cols matrix orthonormalized columnwise (random isometry).
ComplexMatrix haar_random_isometry(std::size_t dim, std::size_t cols, Prng& rng);

/// Induced random mixed state: marginal of a Haar pure state on the doubled system.
DensityMatrix random_mixed_state(std::vector<std::size_t> dims, std::uint64_t seed);

}  // namespace qmono
