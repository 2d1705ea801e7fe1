#pragma once

// Deterministic input generation for tests, verification and accuracy runs.
// The bit-to-double mapping is fixed here (53 uniform mantissa bits from
// mt19937_64) so results are reproducible across platforms and compilers.

#include <cmath>
#include <cstdint>
#include <random>

#include "amqft/signal.hpp"

namespace amqft {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Derives a stream seed from a base seed and up to three coordinates.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a,
                              std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(base ^ 0xA076'1D64'78BD'642Full);
  s = splitmix64(s ^ a);
  s = splitmix64(s ^ b);
  s = splitmix64(s ^ c);
  return s;
}

// Uniform doubles in [-1, 1).
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  double next() {
    return std::ldexp(static_cast<double>(engine_() >> 11), -52) - 1.0;
  }

  void fill(SignalBuffer& buf) {
    for (double& c : buf.cells) c = next();
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace amqft
