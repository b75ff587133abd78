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

// Monte-Carlo and retrieval harnesses: synthetic pairs with a target cosine,
// MSE-vs-k sweeps against the closed-form variances, precision-recall
// retrieval and K-nearest-neighbor classification on sketched data.

#ifndef OPORP_EXPERIMENT_H_
#define OPORP_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oporp/estimate.h"
#include "oporp/matrix.h"
#include "oporp/sketch.h"
#include "oporp/variance.h"

namespace oporp {

struct VectorPair {
  std::vector<double> u;
  std::vector<double> v;
};

// Draws coordinates from a standard bivariate normal with correlation
// rho_target (v = rho z1 + sqrt(1 - rho^2) z2) until the sample cosine is
// within tol of the target, then scales both vectors to unit norm. Throws
// kConvergence after 10^4 attempts.
VectorPair GeneratePairWithCosine(std::size_t dim, double rho_target,
                                  double tol, std::uint64_t seed);

// Inner product and squared norms a pair must reproduce exactly.
struct PairMargins {
  double a = 0.0;
  double sumsq_u = 0.0;
  double sumsq_v = 0.0;
};

// Margins of the HONG / KONG document-count vectors (D = 2^16).
inline constexpr PairMargins kHongKongMargins{12967.0, 13556.0, 13395.0};

// Higher-order shape of a pair: the quantity A and sum u_i^2 v_i^2.
struct PairShape {
  double A = 0.0;
  double sum_u2v2 = 0.0;
};

// Shape at which VarianceRatio(kCosine) equals 4 at s = cosine_crossing and
// VarianceRatio(kInner) equals 4 at s = inner_crossing.
PairShape ShapeForRatioCrossings(const PairMargins& margins,
                                 double cosine_crossing, double inner_crossing);

// Sparse heavy-tailed pair (log-normal magnitudes on `support` random
// coordinates of [0, dim)) matching `margins` exactly and `shape` to 1e-9
// relative. The tail width and the coordinate-level noise between u and v are
// tuned by nested bisection. Built for strongly correlated pairs (rho near
// 0.9 or above); throws kConvergence if the shape is out of reach.
VectorPair GenerateMarginMatchedPair(std::size_t dim, std::size_t support,
                                     const PairMargins& margins,
                                     const PairShape& shape,
                                     std::uint64_t seed);

// HONG-KONG margins; the VSRP/OPORP variance ratio passes 4 just below s = 40
// (normalized) and s = 150 (un-normalized).
VectorPair HongKongLikePair(std::size_t dim = 65536, std::size_t support = 128,
                            std::uint64_t seed = 2023);

struct SweepRow {
  std::size_t k = 0;
  double s = 1.0;
  Scheme scheme = Scheme::kFixedLength;
  Estimator estimator = Estimator::kInnerRaw;
  std::size_t repetitions = 1;
  std::size_t trials = 0;
  double empirical_mse = 0.0;
  double empirical_bias = 0.0;
  double empirical_mean = 0.0;
  double true_value = 0.0;
  // NaN where no closed form exists (approximate MLE).
  double theoretical_var = 0.0;
};

struct SweepOptions {
  std::vector<std::size_t> ks;
  ProjectionDistribution dist = ProjectionDistribution::Rademacher();
  Scheme scheme = Scheme::kFixedLength;  // binning for the OPORP estimators
  std::vector<Estimator> estimators = {Estimator::kInnerRaw};
  std::size_t repetitions = 1;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

// The quantity an estimator targets: a, d or rho.
double TrueValue(Estimator estimator, const PairStatistics& stats);

// Matching variance oracle; NaN for kInnerMLE.
double TheoreticalVariance(Estimator estimator, const PairStatistics& stats,
                           std::size_t k, double s, Scheme scheme,
                           std::size_t repetitions);

// For each k and estimator, sketches (u, v) `trials` times with independent
// seeds and reports empirical MSE and bias against the exact value. Trial t
// at bin count k uses seed DeriveSeed(DeriveSeed(seed, k), t); results do not
// depend on the thread count. Needs trials >= 100.
std::vector<SweepRow> MseSweep(std::span<const double> u,
                               std::span<const double> v,
                               const SweepOptions& options);

struct PRPoint {
  double recall = 0.0;
  double precision = 0.0;
};

// Ranking score of a candidate: an estimator, or the exact cosine.
using RankingMethod = std::optional<Estimator>;

// For every query, the gold list is the top_n base vectors by exact cosine and
// the candidate list ranks all base vectors by the method's score (ties go to
// the lower base index; kDistance ranks ascending). Walking the candidate list
// to depth n gives precision hits/n and recall hits/top_n. Point n-1 of the
// result is the average over queries at depth n.
std::vector<PRPoint> RetrievalEval(const Matrix& base, const Matrix& queries,
                                   const SketchConfig& config,
                                   RankingMethod method, std::size_t top_n);

// Step-wise area: sum_n precision_n (recall_n - recall_{n-1}).
double AreaUnderPr(std::span<const PRPoint> curve);

// Majority vote among the K highest-scoring training vectors. Vote ties go to
// the smaller label. Returns test accuracy.
double KnnEval(const Matrix& train, std::span<const int> train_labels,
               const Matrix& test, std::span<const int> test_labels,
               std::size_t neighbors, const SketchConfig& config,
               RankingMethod method);

struct LabeledData {
  Matrix points;
  std::vector<int> labels;
};

// `count` unit-norm points around `num_clusters` random Gaussian centers;
// point = center + spread * N(0, I), then normalized. Labels cycle 0..c-1.
LabeledData GenerateClusteredData(std::size_t num_clusters, std::size_t dim,
                                  std::size_t count, double spread,
                                  std::uint64_t seed);

}  // namespace oporp

#endif  // OPORP_EXPERIMENT_H_
