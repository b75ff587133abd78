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

// Differentially private sketches.
//
// Data vectors live in [-1, 1]^D; two vectors are neighbors when they differ
// in one coordinate by at most beta, so the l2 sensitivity of an OPORP sketch
// with Rademacher entries is beta.
//
// Mechanism randomness comes from an explicit `noise_seed`, separate from the
// sketch seed: the sketch randomness is shared by all vectors, the noise must
// not be.

#ifndef OPORP_PRIVACY_H_
#define OPORP_PRIVACY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "oporp/sketch.h"

namespace oporp {

struct PrivacySpec {
  double epsilon = 1.0;
  double delta = 1e-6;
  double beta = 1.0;

  double L2Sensitivity() const { return beta; }
};

struct NoisySketch {
  Sketch sketch;  // x + G
  double sigma = 0.0;
};

struct SignSketch {
  std::vector<std::int8_t> bits;   // each -1 or +1
  std::vector<double> flip_probs;  // flip probability used per bit
  SketchConfig config;
};

// Phi(z), via erfc.
double StdNormalCdf(double z);

// delta achieved by Gaussian noise of scale sigma:
//   Phi(D/(2 sigma) - eps sigma / D) - e^eps Phi(-D/(2 sigma) - eps sigma / D)
// with D the l2 sensitivity. Strictly decreasing in sigma.
double GaussianMechanismDelta(double l2_sensitivity, double epsilon,
                              double sigma);

// Smallest sigma with GaussianMechanismDelta(...) == delta, found by bisection
// run down to adjacent doubles. Throws kInvalidParameter for out-of-range
// arguments and kNumeric if the bracket cannot be established.
double SolveGaussianSigma(double l2_sensitivity, double epsilon, double delta);

// Classical sigma = D sqrt(2 ln(1.25/delta)) / eps.
double ClassicalGaussianSigma(double l2_sensitivity, double epsilon,
                              double delta);

// OPORP sketch plus i.i.d. N(0, sigma^2) noise. Needs u in [-1, 1]^D
// (kDomain), a Rademacher single-repetition OPORP config (kInvalidParameter)
// and delta > 0 (kUnsupported).
NoisySketch DpOporp(std::span<const double> u, const SketchConfig& config,
                    const PrivacySpec& spec, std::uint64_t noise_seed);

// 1 / (e^eps + 1).
double RandomizedResponseFlipProbability(double epsilon);

// Sign of each OPORP sample, flipped with probability 1/(e^eps + 1). Zero
// samples become a fair coin.
SignSketch DpSignOporpRr(std::span<const double> u, const SketchConfig& config,
                         double epsilon, std::uint64_t noise_seed);

// As DpSignOporpRr, but bit j uses eps_j = ceil(|x_j| / beta) * eps.
SignSketch DpSignOporpRrSmooth(std::span<const double> u,
                               const SketchConfig& config, double epsilon,
                               double beta, std::uint64_t noise_seed);

// Privatizes precomputed samples. Exposed so tests can pin x.
SignSketch RandomizedResponseSigns(std::span<const double> x,
                                   const SketchConfig& config, double epsilon,
                                   double beta, bool smooth,
                                   std::uint64_t noise_seed);

// Fraction of positions where the bits agree.
double SignSimilarity(const SignSketch& a, const SignSketch& b);

}  // namespace oporp

#endif  // OPORP_PRIVACY_H_
