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

#include "oporp/variance.h"

#include <algorithm>
#include <cmath>

#include "oporp/error.h"

namespace oporp {

PairStatistics ComputePairStatistics(std::span<const double> u,
                                     std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pair statistics need equal-length vectors");
  }
  PairStatistics st;
  st.dim = u.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = u[i];
    const double y = v[i];
    const double diff = x - y;
    st.a += x * y;
    st.sumsq_u += x * x;
    st.sumsq_v += y * y;
    st.sum_u2v2 += x * x * y * y;
    st.sum_u4 += x * x * x * x;
    st.sum_v4 += y * y * y * y;
    st.sum_u3v += x * x * x * y;
    st.sum_uv3 += x * y * y * y;
    st.sum_diff4 += diff * diff * diff * diff;
    st.d += diff * diff;
  }
  if (st.sumsq_u == 0.0 || st.sumsq_v == 0.0) {
    throw Error(ErrorCode::kZeroNorm, "pair statistics need nonzero vectors");
  }
  const double norm_u = std::sqrt(st.sumsq_u);
  const double norm_v = std::sqrt(st.sumsq_v);
  st.rho = std::clamp(st.a / (norm_u * norm_v), -1.0, 1.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = u[i] / norm_u;
    const double y = v[i] / norm_v;
    const double term = x * y - 0.5 * st.rho * (x * x + y * y);
    st.A += term * term;
  }
  return st;
}

IndicatorMoments IndicatorMomentsFor(std::size_t dim, std::size_t k,
                                     Scheme scheme) {
  if (dim == 0 || k == 0) {
    throw Error(ErrorCode::kInvalidParameter, "need D >= 1 and k >= 1");
  }
  const double kk = static_cast<double>(k);
  IndicatorMoments m;
  m.single = 1.0 / kk;
  if (scheme == Scheme::kFixedLength) {
    if (dim % k != 0) {
      throw Error(ErrorCode::kPadRequired,
                  "fixed-length binning needs k | D; pad D to a multiple of k");
    }
    if (dim == 1) {
      // No pair i != i' exists; only the k = 1 identity is meaningful.
      m.same_bin = 1.0;
      m.diff_bin = 0.0;
      return m;
    }
    const double dd = static_cast<double>(dim);
    m.same_bin = (dd - kk) / ((dd - 1.0) * kk * kk);
    m.diff_bin = dd / ((dd - 1.0) * kk * kk);
  } else {
    m.same_bin = 1.0 / (kk * kk);
    m.diff_bin = 1.0 / (kk * kk);
  }
  return m;
}

double BinningFactor(std::size_t dim, std::size_t k, Scheme scheme) {
  if (scheme != Scheme::kFixedLength || k <= 1) return 1.0;
  const std::size_t padded = (dim + k - 1) / k * k;
  return static_cast<double>(padded - k) / static_cast<double>(padded - 1);
}

double VarInner(const PairStatistics& st, std::size_t k, double s,
                Scheme scheme, std::size_t repetitions) {
  const double f = BinningFactor(st.dim, k, scheme);
  const double sampling =
      (st.a * st.a + st.sumsq_u * st.sumsq_v - 2.0 * st.sum_u2v2) /
      static_cast<double>(k);
  return ((s - 1.0) * st.sum_u2v2 + sampling * f) /
         static_cast<double>(repetitions);
}

double VarInnerVsrp(const PairStatistics& st, std::size_t k, double s) {
  return (st.a * st.a + st.sumsq_u * st.sumsq_v + (s - 3.0) * st.sum_u2v2) /
         static_cast<double>(k);
}

double VarDistance(const PairStatistics& st, std::size_t k, double s,
                   Scheme scheme) {
  const double f = BinningFactor(st.dim, k, scheme);
  return (s - 1.0) * st.sum_diff4 +
         (2.0 * st.d * st.d - 2.0 * st.sum_diff4) / static_cast<double>(k) * f;
}

double VarCosine(const PairStatistics& st, std::size_t k, double s,
                 Scheme scheme) {
  const double f = BinningFactor(st.dim, k, scheme);
  const double one_minus = 1.0 - st.rho * st.rho;
  return (s - 1.0) * st.A +
         (one_minus * one_minus - 2.0 * st.A) / static_cast<double>(k) * f;
}

double VarCosineVsrp(const PairStatistics& st, std::size_t k, double s) {
  const double one_minus = 1.0 - st.rho * st.rho;
  return (one_minus * one_minus + (s - 3.0) * st.A) / static_cast<double>(k);
}

double VarNormalizedInner(const PairStatistics& st, std::size_t k, double s,
                          Scheme scheme) {
  return VarCosine(st, k, s, scheme) * st.sumsq_u * st.sumsq_v;
}

double VarianceRatio(const PairStatistics& st, double s, RatioKind which) {
  if (!(s >= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "variance ratio needs s >= 1");
  }
  double numerator = 0.0;
  double denominator = 0.0;
  if (which == RatioKind::kInner) {
    const double base = st.sumsq_u * st.sumsq_v + st.a * st.a;
    numerator = base + (s - 3.0) * st.sum_u2v2;
    denominator = base - 2.0 * st.sum_u2v2;
  } else {
    const double one_minus = 1.0 - st.rho * st.rho;
    const double base = one_minus * one_minus;
    numerator = base + (s - 3.0) * st.A;
    denominator = base - 2.0 * st.A;
  }
  if (!(denominator > 0.0)) {
    throw Error(ErrorCode::kDegeneratePair,
                "variance ratio denominator is not positive");
  }
  return numerator / denominator;
}

}  // namespace oporp
