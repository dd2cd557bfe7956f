#include "esfp/noise.hpp"

#include <cmath>
#include <numbers>

namespace esfp {
namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;
constexpr std::uint32_t kMulA = 0xD2511F53;
constexpr std::uint32_t kMulB = 0xCD9E8D57;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMulA, ctr[0], hi0, lo0);
    mulhilo(kMulB, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

std::array<double, 4> NoiseStream::uniform4(StreamDomain domain, std::uint64_t step, std::uint64_t particle) const {
  const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
  // Counter layout: particle (64 bits), step (low 32 bits), then
  // [domain:8 | half:1 | step bits 32..54].
  const auto tag = [&](std::uint32_t half) {
    return (static_cast<std::uint32_t>(domain) << 24) | (half << 23) |
           static_cast<std::uint32_t>((step >> 32) & 0x7FFFFF);
  };
  const std::array<std::uint32_t, 4> base{static_cast<std::uint32_t>(particle), static_cast<std::uint32_t>(particle >> 32),
                                          static_cast<std::uint32_t>(step), tag(0)};
  auto other = base;
  other[3] = tag(1);
  const auto r0 = philox4x32(base, key);
  const auto r1 = philox4x32(other, key);
  return {to_open_unit(r0[0], r0[1]), to_open_unit(r0[2], r0[3]), to_open_unit(r1[0], r1[1]),
          to_open_unit(r1[2], r1[3])};
}

Vector3 NoiseStream::standard_normal_triple(std::uint64_t step, std::uint64_t particle) const {
  const auto u = uniform4(StreamDomain::kStepNoise, step, particle);
  const double r0 = std::sqrt(-2.0 * std::log(u[0]));
  const double r1 = std::sqrt(-2.0 * std::log(u[2]));
  const double a0 = 2.0 * std::numbers::pi * u[1];
  const double a1 = 2.0 * std::numbers::pi * u[3];
  return {r0 * std::cos(a0), r0 * std::sin(a0), r1 * std::cos(a1)};
}

}  // namespace esfp
