#pragma once

#include <array>
#include <cstdint>

#include "esfp/tensor3.hpp"

namespace esfp {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Independent sub-streams addressed by the same (step, particle) coordinates.
enum class StreamDomain : std::uint8_t {
  kStepNoise = 0,
  kInitialSample = 1,
};

/// Reproducible random numbers addressed by (seed, step, particle). No state is
/// carried between draws, so the result never depends on evaluation order or
/// thread count.
class NoiseStream {
 public:
  explicit NoiseStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Four uniforms in the open interval (0, 1), 53-bit resolution.
  std::array<double, 4> uniform4(StreamDomain domain, std::uint64_t step, std::uint64_t particle) const;

  /// Three independent N(0, 1) variates (Box-Muller on uniform4).
  Vector3 standard_normal_triple(std::uint64_t step, std::uint64_t particle) const;

 private:
  std::uint64_t seed_;
};

}  // namespace esfp
