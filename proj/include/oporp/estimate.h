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

// Similarity estimators computed from a pair of sketches that share a config.
//
// With m > 1 repetitions every estimator is evaluated per repetition block and
// the m block estimates are averaged.

#ifndef OPORP_ESTIMATE_H_
#define OPORP_ESTIMATE_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oporp/sketch.h"

namespace oporp {

enum class Estimator {
  kInnerRaw,          // a_hat = sum x_j y_j
  kDistance,          // d_hat = sum (x_j - y_j)^2
  kCosineNormalized,  // rho_hat = sum x y / (|x| |y|)
  kInnerNormalized,   // a_n = rho_hat |u| |v|
  kInnerMLE,          // root of the margin-aware likelihood cubic
  kVsrpInner,         // (1/k) sum x_j y_j on a VSRP sketch
  kVsrpCosine,        // rho_hat on a VSRP sketch
};

inline constexpr std::array<Estimator, 7> kAllEstimators = {
    Estimator::kInnerRaw,        Estimator::kDistance,
    Estimator::kCosineNormalized, Estimator::kInnerNormalized,
    Estimator::kInnerMLE,        Estimator::kVsrpInner,
    Estimator::kVsrpCosine,
};

// CLI names: inner, distance, cosine, inner_normalized, inner_mle, vsrp_inner,
// vsrp_cosine.
std::string_view EstimatorName(Estimator estimator);
Estimator ParseEstimator(std::string_view name);

// True for estimators that consume a VSRP sketch.
bool UsesVsrpSketch(Estimator estimator);

struct EstimateResult {
  double value = 0.0;
  Estimator estimator = Estimator::kInnerRaw;
};

// Throws kIncompatibleSketch unless the two sketches were made with the same
// config and have the expected length.
void CheckCompatible(const Sketch& x, const Sketch& y);

double InnerProductHat(const Sketch& x, const Sketch& y);
double DistanceHat(const Sketch& x, const Sketch& y);
// In [-1, 1]. Throws kZeroNorm when a block of either sketch is all zeros.
double CosineHat(const Sketch& x, const Sketch& y);

double NormalizedInnerProduct(double rho_hat, double norm_u, double norm_v);

// Approximate MLE of the inner product given the squared norms of the original
// vectors. Per block, solves
//   t^3 - t^2 S + t (-E F + E Y + F X) - E F S = 0
// with S = sum x y, X = sum x^2, Y = sum y^2, E = sumsq_u, F = sumsq_v, keeps
// real roots in [-sqrt(EF), sqrt(EF)] and returns the one closest to the
// normalized estimate rho_hat * sqrt(EF).
double MleInnerProduct(const Sketch& x, const Sketch& y, double sumsq_u,
                       double sumsq_v);

double VsrpInnerProductHat(const Sketch& x, const Sketch& y);
double VsrpCosineHat(const Sketch& x, const Sketch& y);

// Dispatches on `estimator`. kInnerNormalized and kInnerMLE read the original
// norms from Sketch::stored_norm; kZeroNorm/kInvalidParameter if absent.
EstimateResult Estimate(Estimator estimator, const Sketch& x, const Sketch& y);

// Real roots of t^3 + b t^2 + c t + d, ascending, each polished by Newton
// steps. Repeated roots are reported once per multiplicity.
std::vector<double> SolveMonicCubic(double b, double c, double d);

}  // namespace oporp

#endif  // OPORP_ESTIMATE_H_
