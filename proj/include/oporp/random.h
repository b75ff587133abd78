//
// Copyright 2026 The OPORP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Seeded randomness shared by every module.
//
// The generator is SplitMix64 (Steele, Lea, Flood 2014). Independent streams
// are derived by hashing a parent seed with a stream index (DeriveSeed), so a
// stream for (trial, repetition, purpose) never depends on how many values an
// unrelated stream consumed. This keeps Monte-Carlo runs reproducible no
// matter how trials are split across threads.
//
// Distribution samplers are written out explicitly rather than taken from
// <random>, whose distributions are implementation-defined:
//   * UniformUnit: top 53 bits scaled by 2^-53, in [0, 1).
//   * UniformBelow: Lemire's multiply-shift with rejection (unbiased).
//   * StandardNormal: Marsaglia polar method; the second variate is dropped.

#ifndef OPORP_RANDOM_H_
#define OPORP_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <limits>

namespace oporp {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 output finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of the sub-stream `stream` of `seed`.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return Mix64(seed ^ Mix64(stream + kGoldenGamma));
}

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() {
    state_ += kGoldenGamma;
    return Mix64(state_);
  }

 private:
  std::uint64_t state_;
};

inline double UniformUnit(SplitMix64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). n must be positive.
inline std::uint64_t UniformBelow(SplitMix64& gen, std::uint64_t n) {
  std::uint64_t x = gen();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = gen();
      m = static_cast<__uint128_t>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

inline double StandardNormal(SplitMix64& gen) {
  for (;;) {
    const double a = 2.0 * UniformUnit(gen) - 1.0;
    const double b = 2.0 * UniformUnit(gen) - 1.0;
    const double r2 = a * a + b * b;
    if (r2 > 0.0 && r2 < 1.0) {
      return a * std::sqrt(-2.0 * std::log(r2) / r2);
    }
  }
}

}  // namespace oporp

#endif  // OPORP_RANDOM_H_
