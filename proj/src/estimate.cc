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

#include "oporp/estimate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oporp/error.h"

namespace oporp {
namespace {

struct BlockSums {
  double xy = 0.0;
  double xx = 0.0;
  double yy = 0.0;
};

BlockSums SumBlock(std::span<const double> x, std::span<const double> y) {
  BlockSums sums;
  for (std::size_t j = 0; j < x.size(); ++j) {
    sums.xy += x[j] * y[j];
    sums.xx += x[j] * x[j];
    sums.yy += y[j] * y[j];
  }
  return sums;
}

double BlockCosine(const BlockSums& sums, std::size_t rep) {
  if (sums.xx == 0.0 || sums.yy == 0.0) {
    throw Error(ErrorCode::kZeroNorm,
                "cosine undefined: sketch block " + std::to_string(rep) +
                    " has zero norm");
  }
  const double rho = sums.xy / (std::sqrt(sums.xx) * std::sqrt(sums.yy));
  return std::clamp(rho, -1.0, 1.0);
}

// Mean over blocks of fn(block sums, rep).
template <typename Fn>
double AverageOverBlocks(const Sketch& x, const Sketch& y, Fn fn) {
  CheckCompatible(x, y);
  const std::size_t blocks = x.num_blocks();
  double total = 0.0;
  for (std::size_t rep = 0; rep < blocks; ++rep) {
    total += fn(SumBlock(x.Block(rep), y.Block(rep)), rep);
  }
  return total / static_cast<double>(blocks);
}

void RequireScheme(const Sketch& x, bool want_vsrp) {
  const bool is_vsrp = x.config.scheme == Scheme::kVsrp;
  if (is_vsrp != want_vsrp) {
    throw Error(ErrorCode::kIncompatibleSketch,
                want_vsrp ? "estimator needs VSRP sketches"
                          : "estimator needs OPORP sketches");
  }
}

double CubicAt(double b, double c, double d, double t) {
  return ((t + b) * t + c) * t + d;
}

double Polish(double b, double c, double d, double t) {
  double f = CubicAt(b, c, d, t);
  for (int iter = 0; iter < 4 && f != 0.0; ++iter) {
    const double df = (3.0 * t + 2.0 * b) * t + c;
    if (df == 0.0) break;
    const double next = t - f / df;
    const double f_next = CubicAt(b, c, d, next);
    if (!(std::abs(f_next) < std::abs(f))) break;
    t = next;
    f = f_next;
  }
  return t;
}

// Root of the scaled MLE cubic in [-1, 1]; f(-1) <= 0 <= f(1) holds because
// |S| <= sqrt(XY) makes EY + FX >= 2 sqrt(EF) |S|.
double BisectUnitInterval(double b, double c, double d) {
  double lo = -1.0;
  double hi = 1.0;
  if (CubicAt(b, c, d, lo) > 0.0 || CubicAt(b, c, d, hi) < 0.0) {
    throw Error(ErrorCode::kEstimationFailure,
                "MLE cubic has no sign change on the feasible interval");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (CubicAt(b, c, d, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view EstimatorName(Estimator estimator) {
  switch (estimator) {
    case Estimator::kInnerRaw:
      return "inner";
    case Estimator::kDistance:
      return "distance";
    case Estimator::kCosineNormalized:
      return "cosine";
    case Estimator::kInnerNormalized:
      return "inner_normalized";
    case Estimator::kInnerMLE:
      return "inner_mle";
    case Estimator::kVsrpInner:
      return "vsrp_inner";
    case Estimator::kVsrpCosine:
      return "vsrp_cosine";
  }
  return "unknown";
}

Estimator ParseEstimator(std::string_view name) {
  for (Estimator e : kAllEstimators) {
    if (EstimatorName(e) == name) return e;
  }
  throw Error(ErrorCode::kInvalidParameter,
              "unknown estimator '" + std::string(name) + "'");
}

bool UsesVsrpSketch(Estimator estimator) {
  return estimator == Estimator::kVsrpInner ||
         estimator == Estimator::kVsrpCosine;
}

void CheckCompatible(const Sketch& x, const Sketch& y) {
  if (!(x.config == y.config)) {
    throw Error(ErrorCode::kIncompatibleSketch,
                "sketches were produced with different configs");
  }
  const std::size_t expected = x.config.k * x.config.repetitions;
  if (x.values.size() != expected || y.values.size() != expected ||
      expected == 0) {
    throw Error(ErrorCode::kIncompatibleSketch,
                "sketch length does not match k * m");
  }
}

double InnerProductHat(const Sketch& x, const Sketch& y) {
  RequireScheme(x, false);
  return AverageOverBlocks(
      x, y, [](const BlockSums& s, std::size_t) { return s.xy; });
}

double DistanceHat(const Sketch& x, const Sketch& y) {
  RequireScheme(x, false);
  CheckCompatible(x, y);
  const std::size_t blocks = x.num_blocks();
  double total = 0.0;
  for (std::size_t rep = 0; rep < blocks; ++rep) {
    const auto xb = x.Block(rep);
    const auto yb = y.Block(rep);
    double sum = 0.0;
    for (std::size_t j = 0; j < xb.size(); ++j) {
      const double diff = xb[j] - yb[j];
      sum += diff * diff;
    }
    total += sum;
  }
  return total / static_cast<double>(blocks);
}

double CosineHat(const Sketch& x, const Sketch& y) {
  return AverageOverBlocks(x, y, BlockCosine);
}

double NormalizedInnerProduct(double rho_hat, double norm_u, double norm_v) {
  if (norm_u < 0.0 || norm_v < 0.0) {
    throw Error(ErrorCode::kInvalidParameter, "norms must be non-negative");
  }
  return rho_hat * norm_u * norm_v;
}

double MleInnerProduct(const Sketch& x, const Sketch& y, double sumsq_u,
                       double sumsq_v) {
  RequireScheme(x, false);
  if (!(sumsq_u > 0.0) || !(sumsq_v > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "MLE needs positive squared norms of the original vectors");
  }
  const double scale = std::sqrt(sumsq_u) * std::sqrt(sumsq_v);
  // Substituting a = scale * t makes the feasible interval [-1, 1].
  return AverageOverBlocks(x, y, [&](const BlockSums& s, std::size_t rep) {
    const double target = BlockCosine(s, rep);
    const double b = -s.xy / scale;
    const double c = -1.0 + (sumsq_u * s.yy + sumsq_v * s.xx) / (scale * scale);
    const double d = -s.xy / scale;
    constexpr double kSlack = 1e-9;
    double best = 0.0;
    bool found = false;
    for (double root : SolveMonicCubic(b, c, d)) {
      if (root < -1.0 - kSlack || root > 1.0 + kSlack) continue;
      root = std::clamp(root, -1.0, 1.0);
      if (!found || std::abs(root - target) < std::abs(best - target)) {
        best = root;
        found = true;
      }
    }
    if (!found) best = BisectUnitInterval(b, c, d);
    return best * scale;
  });
}

double VsrpInnerProductHat(const Sketch& x, const Sketch& y) {
  RequireScheme(x, true);
  const double k = static_cast<double>(x.config.k);
  return AverageOverBlocks(
      x, y, [k](const BlockSums& s, std::size_t) { return s.xy / k; });
}

double VsrpCosineHat(const Sketch& x, const Sketch& y) {
  RequireScheme(x, true);
  return AverageOverBlocks(x, y, BlockCosine);
}

EstimateResult Estimate(Estimator estimator, const Sketch& x, const Sketch& y) {
  EstimateResult result;
  result.estimator = estimator;
  switch (estimator) {
    case Estimator::kInnerRaw:
      result.value = InnerProductHat(x, y);
      break;
    case Estimator::kDistance:
      result.value = DistanceHat(x, y);
      break;
    case Estimator::kCosineNormalized:
      RequireScheme(x, false);
      result.value = CosineHat(x, y);
      break;
    case Estimator::kInnerNormalized:
    case Estimator::kInnerMLE: {
      if (!x.stored_norm || !y.stored_norm) {
        throw Error(ErrorCode::kInvalidParameter,
                    "estimator needs the stored norms of both vectors");
      }
      RequireScheme(x, false);
      const double nu = *x.stored_norm;
      const double nv = *y.stored_norm;
      result.value =
          estimator == Estimator::kInnerNormalized
              ? NormalizedInnerProduct(CosineHat(x, y), nu, nv)
              : MleInnerProduct(x, y, nu * nu, nv * nv);
      break;
    }
    case Estimator::kVsrpInner:
      result.value = VsrpInnerProductHat(x, y);
      break;
    case Estimator::kVsrpCosine:
      result.value = VsrpCosineHat(x, y);
      break;
  }
  return result;
}

std::vector<double> SolveMonicCubic(double b, double c, double d) {
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double half_q = q / 2.0;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  std::vector<double> roots;
  if (p == 0.0 && q == 0.0) {
    roots = {-shift, -shift, -shift};
  } else if (disc > 0.0) {
    // One real root. Pick the cube-root branch that avoids cancellation.
    const double big = -std::copysign(std::cbrt(std::abs(half_q) + std::sqrt(disc)), q);
    const double small = big != 0.0 ? -third_p / big : 0.0;
    roots = {big + small - shift};
  } else {
    const double radius = 2.0 * std::sqrt(-third_p);
    const double arg =
        std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int i = 0; i < 3; ++i) {
      roots.push_back(radius * std::cos(theta - 2.0 * std::numbers::pi * i / 3.0) -
                      shift);
    }
  }
  for (double& r : roots) r = Polish(b, c, d, r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace oporp
