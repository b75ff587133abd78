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

#include "oporp/privacy.h"

#include <cmath>
#include <numbers>
#include <string>

#include "oporp/error.h"
#include "oporp/random.h"

namespace oporp {
namespace {

constexpr int kMaxBracketDoublings = 200;

void CheckPrivacyArgs(double l2_sensitivity, double epsilon, double delta) {
  if (!(l2_sensitivity > 0.0) || !std::isfinite(l2_sensitivity)) {
    throw Error(ErrorCode::kInvalidParameter, "l2 sensitivity must be > 0");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidParameter, "epsilon must be > 0");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "delta must lie in (0, 1)");
  }
}

void CheckMechanismConfig(const SketchConfig& config) {
  config.Validate();
  if (config.scheme == Scheme::kVsrp ||
      config.dist.kind() != DistributionKind::kRademacher ||
      config.repetitions != 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "private sketches need a Rademacher OPORP config with m = 1");
  }
}

void CheckUnitBox(std::span<const double> u) {
  for (double x : u) {
    if (!(x >= -1.0 && x <= 1.0)) {
      throw Error(ErrorCode::kDomain,
                  "private sketches need every coordinate in [-1, 1]");
    }
  }
}

}  // namespace

double StdNormalCdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double GaussianMechanismDelta(double l2_sensitivity, double epsilon,
                              double sigma) {
  const double a = l2_sensitivity / (2.0 * sigma);
  const double b = epsilon * sigma / l2_sensitivity;
  return StdNormalCdf(a - b) - std::exp(epsilon) * StdNormalCdf(-a - b);
}

double ClassicalGaussianSigma(double l2_sensitivity, double epsilon,
                              double delta) {
  return l2_sensitivity * std::sqrt(2.0 * std::log(1.25 / delta)) / epsilon;
}

double SolveGaussianSigma(double l2_sensitivity, double epsilon, double delta) {
  CheckPrivacyArgs(l2_sensitivity, epsilon, delta);
  auto excess = [&](double sigma) {
    return GaussianMechanismDelta(l2_sensitivity, epsilon, sigma) - delta;
  };
  double lo = l2_sensitivity / (10.0 * epsilon);
  double hi = 10.0 * ClassicalGaussianSigma(l2_sensitivity, epsilon, delta);
  int doublings = 0;
  while (excess(lo) < 0.0) {
    lo /= 2.0;
    if (++doublings > kMaxBracketDoublings) {
      throw Error(ErrorCode::kNumeric, "cannot bracket sigma from below");
    }
  }
  doublings = 0;
  while (excess(hi) > 0.0) {
    hi *= 2.0;
    if (++doublings > kMaxBracketDoublings) {
      throw Error(ErrorCode::kNumeric, "cannot bracket sigma from above");
    }
  }
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(excess(lo)) < std::abs(excess(hi)) ? lo : hi;
}

NoisySketch DpOporp(std::span<const double> u, const SketchConfig& config,
                    const PrivacySpec& spec, std::uint64_t noise_seed) {
  CheckMechanismConfig(config);
  CheckUnitBox(u);
  if (spec.delta == 0.0) {
    throw Error(ErrorCode::kUnsupported,
                "the Gaussian mechanism needs delta > 0");
  }
  NoisySketch out;
  out.sigma = SolveGaussianSigma(spec.L2Sensitivity(), spec.epsilon, spec.delta);
  out.sketch = OporpSketch(u, config);
  SplitMix64 gen(noise_seed);
  for (double& x : out.sketch.values) x += out.sigma * StandardNormal(gen);
  return out;
}

double RandomizedResponseFlipProbability(double epsilon) {
  return 1.0 / (std::exp(epsilon) + 1.0);
}

SignSketch RandomizedResponseSigns(std::span<const double> x,
                                   const SketchConfig& config, double epsilon,
                                   double beta, bool smooth,
                                   std::uint64_t noise_seed) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "epsilon must be > 0");
  }
  if (smooth && !(beta > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "beta must be > 0");
  }
  SignSketch out;
  out.config = config;
  out.bits.resize(x.size());
  out.flip_probs.resize(x.size());
  SplitMix64 gen(noise_seed);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double coin = UniformUnit(gen);
    if (x[j] == 0.0) {
      // sign(0) has no preferred side: the output bit is a fair coin.
      out.flip_probs[j] = 0.5;
      out.bits[j] = coin < 0.5 ? -1 : 1;
      continue;
    }
    const double level = smooth ? std::ceil(std::abs(x[j]) / beta) : 1.0;
    const double p = RandomizedResponseFlipProbability(level * epsilon);
    const std::int8_t sign = x[j] > 0.0 ? 1 : -1;
    out.flip_probs[j] = p;
    out.bits[j] = coin < p ? static_cast<std::int8_t>(-sign) : sign;
  }
  return out;
}

SignSketch DpSignOporpRr(std::span<const double> u, const SketchConfig& config,
                         double epsilon, std::uint64_t noise_seed) {
  CheckMechanismConfig(config);
  const Sketch sketch = OporpSketch(u, config);
  return RandomizedResponseSigns(sketch.values, config, epsilon, 1.0, false,
                                 noise_seed);
}

SignSketch DpSignOporpRrSmooth(std::span<const double> u,
                               const SketchConfig& config, double epsilon,
                               double beta, std::uint64_t noise_seed) {
  CheckMechanismConfig(config);
  const Sketch sketch = OporpSketch(u, config);
  return RandomizedResponseSigns(sketch.values, config, epsilon, beta, true,
                                 noise_seed);
}

double SignSimilarity(const SignSketch& a, const SignSketch& b) {
  if (a.bits.size() != b.bits.size() || a.bits.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sign sketches must be non-empty and of equal length");
  }
  std::size_t agree = 0;
  for (std::size_t j = 0; j < a.bits.size(); ++j) {
    if (a.bits[j] == b.bits[j]) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(a.bits.size());
}

}  // namespace oporp
