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

// Closed-form variances of the sketch estimators.
//
// For fixed-length binning the finite-population factor
//   F = (D' - k) / (D' - 1)
// multiplies the 1/k term, where D' is the zero-padded dimension (the next
// multiple of k). Variable-length binning and VSRP use F = 1.

#ifndef OPORP_VARIANCE_H_
#define OPORP_VARIANCE_H_

#include <cstddef>
#include <span>
#include <string>

#include "oporp/sketch.h"

namespace oporp {

// Moment sums of a vector pair.
struct PairStatistics {
  std::size_t dim = 0;
  double a = 0.0;  // sum u_i v_i
  double sumsq_u = 0.0;
  double sumsq_v = 0.0;
  double sum_u2v2 = 0.0;
  double sum_u4 = 0.0;
  double sum_v4 = 0.0;
  double sum_u3v = 0.0;
  double sum_uv3 = 0.0;
  double sum_diff4 = 0.0;  // sum (u_i - v_i)^4
  double rho = 0.0;
  double d = 0.0;  // sum (u_i - v_i)^2
  // sum_i (u'_i v'_i - rho/2 (u'_i^2 + v'_i^2))^2 over unit-normalized u', v'.
  double A = 0.0;
};

// Throws kDimensionMismatch on unequal lengths and kZeroNorm if either vector
// is all zeros.
PairStatistics ComputePairStatistics(std::span<const double> u,
                                     std::span<const double> v);

// Indicator moments of one coordinate-to-bin assignment:
//   single     E I_ij
//   same_bin   E I_ij I_i'j     (i != i')
//   diff_bin   E I_ij I_i'j'    (i != i', j != j')
// k * same_bin + k (k - 1) * diff_bin == 1 for both schemes.
struct IndicatorMoments {
  double single = 0.0;
  double same_bin = 0.0;
  double diff_bin = 0.0;
};

// Fixed-length binning requires k | D (throws kPadRequired otherwise).
IndicatorMoments IndicatorMomentsFor(std::size_t dim, std::size_t k,
                                     Scheme scheme);

// F for the scheme, on the padded dimension. 1 for k == 1.
double BinningFactor(std::size_t dim, std::size_t k, Scheme scheme);

// Var(a_hat) with m independent repetitions averaged:
//   (1/m) [ (s-1) sum u^2 v^2 + (1/k)(a^2 + |u|^2 |v|^2 - 2 sum u^2 v^2) F ]
double VarInner(const PairStatistics& stats, std::size_t k, double s,
                Scheme scheme, std::size_t repetitions = 1);

// Var(a_vsrp) = (1/k)(a^2 + |u|^2 |v|^2 + (s-3) sum u^2 v^2).
double VarInnerVsrp(const PairStatistics& stats, std::size_t k, double s);

// Var(d_hat) = (s-1) sum|u-v|^4 + (1/k)(2 d^2 - 2 sum|u-v|^4) F.
double VarDistance(const PairStatistics& stats, std::size_t k, double s,
                   Scheme scheme);

// Asymptotic Var(rho_hat) = (s-1) A + (1/k)[(1-rho^2)^2 - 2A] F.
double VarCosine(const PairStatistics& stats, std::size_t k, double s,
                 Scheme scheme);

// Asymptotic Var(rho_vsrp) = (1/k)[(1-rho^2)^2 + (s-3) A].
double VarCosineVsrp(const PairStatistics& stats, std::size_t k, double s);

// Var(a_n) = Var(rho_hat) |u|^2 |v|^2.
double VarNormalizedInner(const PairStatistics& stats, std::size_t k, double s,
                          Scheme scheme);

enum class RatioKind { kInner, kCosine };

// VSRP(s) variance over OPORP(s = 1) variance with the binning factor dropped.
// Throws kDegeneratePair when the denominator is <= 0.
double VarianceRatio(const PairStatistics& stats, double s, RatioKind which);

struct VarianceReport {
  std::string estimator;
  std::size_t k = 0;
  double s = 1.0;
  std::size_t repetitions = 1;
  Scheme scheme = Scheme::kFixedLength;
  double value = 0.0;
};

}  // namespace oporp

#endif  // OPORP_VARIANCE_H_
