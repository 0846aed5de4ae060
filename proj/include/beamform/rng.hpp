#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace beamform {

// Stateless SplitMix64 finalizer. Used for seed derivation so that every
// (channel, restart, ...) stream is an independent, platform-stable function
// of the master seed.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed from a parent seed plus up to three context words.
inline uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0,
                            uint64_t c = 0) {
  uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  return mix64(h ^ c);
}

// xoshiro256++ with SplitMix64 state expansion. The generator, its seeding
// and the Box–Muller transform below are fixed by this header, bit for bit,
// so seeded experiments reproduce across runs and platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& s : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      s = z ^ (z >> 31);
    }
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53 random mantissa bits.
  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-bound, bound].
  double uniform_symmetric(double bound) {
    return bound * (2.0 * uniform01() - 1.0);
  }

  // One Box–Muller pair of independent standard normals. u1 is mapped into
  // (0, 1] so the log stays finite.
  std::pair<double, double> gaussian_pair() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * kPi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    auto [z0, z1] = gaussian_pair();
    spare_ = z1;
    have_spare_ = true;
    return z0;
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static uint64_t rotl(uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::array<uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace beamform
