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

#include "oporp/experiment.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "oporp/error.h"
#include "oporp/random.h"

namespace oporp {
namespace {

constexpr int kMaxPairAttempts = 10000;
constexpr int kBisectionSteps = 200;

double Dot(std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return sum;
}

void ScaleToUnit(std::span<double> x) {
  const double norm = std::sqrt(Dot(x, x));
  for (double& e : x) e /= norm;
}

// Runs fn(t) for t in [0, n) on `threads` workers, contiguous chunks each.
void ParallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t)>& fn) {
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t t = 0; t < n; ++t) fn(t);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        for (std::size_t t = begin; t < end; ++t) fn(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Candidate pair for one (tail, noise) setting; see GenerateMarginMatchedPair.
struct MarginPairBuilder {
  std::size_t dim;
  std::vector<std::size_t> positions;
  std::vector<double> z_tail;
  std::vector<double> z_noise;
  PairMargins margins;

  VectorPair Build(double tail, double noise) const {
    const std::size_t n = positions.size();
    std::vector<double> u(n), raw_v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = std::exp(tail * z_tail[i]);
      u[i] = w;
      raw_v[i] = w * std::exp(noise * z_noise[i]);
    }
    const double u_scale = std::sqrt(margins.sumsq_u / Dot(u, u));
    for (double& x : u) x *= u_scale;
    const double uu = Dot(u, u);
    const double proj = Dot(raw_v, u) / uu;
    std::vector<double> perp(n);
    for (std::size_t i = 0; i < n; ++i) perp[i] = raw_v[i] - proj * u[i];
    const double c1 = margins.a / uu;
    const double c2 =
        std::sqrt((margins.sumsq_v - c1 * c1 * uu) / Dot(perp, perp));
    VectorPair pair;
    pair.u.assign(dim, 0.0);
    pair.v.assign(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      pair.u[positions[i]] = u[i];
      pair.v[positions[i]] = c1 * u[i] + c2 * perp[i];
    }
    return pair;
  }
};

// Bisection for an increasing function: returns x in [lo, hi] with f(x) ~ target.
template <typename Fn>
double SolveIncreasing(Fn f, double lo, double hi, double target,
                       const char* what) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo <= target && f_hi >= target)) {
    throw Error(ErrorCode::kConvergence,
                std::string("cannot bracket ") + what + " = " +
                    std::to_string(target) + " (range " + std::to_string(f_lo) +
                    " to " + std::to_string(f_hi) + ")");
  }
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<std::size_t> RankDescending(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  return order;
}

double ExactCosine(std::span<const double> x, std::span<const double> y) {
  const double nx = std::sqrt(Dot(x, x));
  const double ny = std::sqrt(Dot(y, y));
  if (nx == 0.0 || ny == 0.0) {
    throw Error(ErrorCode::kZeroNorm, "cosine of a zero vector");
  }
  return Dot(x, y) / (nx * ny);
}

// Scores of every base row against every query row, queries-major.
class Scorer {
 public:
  Scorer(const Matrix& base, const Matrix& queries, const SketchConfig& config,
         RankingMethod method)
      : base_(base), queries_(queries), method_(method) {
    if (base.rows == 0 || queries.rows == 0) {
      throw Error(ErrorCode::kInvalidParameter, "base and queries must be non-empty");
    }
    if (base.cols != queries.cols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "base and query vectors differ in dimension");
    }
    if (!method_) return;
    if (UsesVsrpSketch(*method_) != (config.scheme == Scheme::kVsrp)) {
      throw Error(ErrorCode::kIncompatibleSketch,
                  "estimator and sketch scheme do not match");
    }
    base_sketches_ = SketchRows(base, config);
    query_sketches_ = SketchRows(queries, config);
  }

  std::vector<double> Scores(std::size_t q) const {
    std::vector<double> out(base_.rows);
    for (std::size_t i = 0; i < base_.rows; ++i) {
      if (!method_) {
        out[i] = ExactCosine(queries_.Row(q), base_.Row(i));
        continue;
      }
      const double value =
          Estimate(*method_, query_sketches_[q], base_sketches_[i]).value;
      out[i] = *method_ == Estimator::kDistance ? -value : value;
    }
    return out;
  }

 private:
  static std::vector<Sketch> SketchRows(const Matrix& m,
                                        const SketchConfig& config) {
    std::vector<Sketch> out;
    out.reserve(m.rows);
    if (config.scheme == Scheme::kVsrp) {
      for (std::size_t i = 0; i < m.rows; ++i) out.push_back(VsrpSketch(m.Row(i), config));
    } else {
      const OporpSketcher sketcher(config);
      for (std::size_t i = 0; i < m.rows; ++i) out.push_back(sketcher.Apply(m.Row(i)));
    }
    return out;
  }

  const Matrix& base_;
  const Matrix& queries_;
  RankingMethod method_;
  std::vector<Sketch> base_sketches_;
  std::vector<Sketch> query_sketches_;
};

}  // namespace

VectorPair GeneratePairWithCosine(std::size_t dim, double rho_target,
                                  double tol, std::uint64_t seed) {
  if (dim < 2) {
    throw Error(ErrorCode::kInvalidDimension, "pair generation needs D >= 2");
  }
  if (!(std::abs(rho_target) < 1.0) || !(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "need |rho| < 1 and tol > 0");
  }
  const double mix = std::sqrt(1.0 - rho_target * rho_target);
  VectorPair pair;
  pair.u.resize(dim);
  pair.v.resize(dim);
  for (int attempt = 0; attempt < kMaxPairAttempts; ++attempt) {
    SplitMix64 gen(DeriveSeed(seed, attempt));
    for (std::size_t i = 0; i < dim; ++i) {
      const double z1 = StandardNormal(gen);
      const double z2 = StandardNormal(gen);
      pair.u[i] = z1;
      pair.v[i] = rho_target * z1 + mix * z2;
    }
    ScaleToUnit(pair.u);
    ScaleToUnit(pair.v);
    if (std::abs(Dot(pair.u, pair.v) - rho_target) <= tol) return pair;
  }
  throw Error(ErrorCode::kConvergence,
              "no pair within tolerance after 10^4 attempts; raise tol or D");
}

PairShape ShapeForRatioCrossings(const PairMargins& margins,
                                 double cosine_crossing, double inner_crossing) {
  // ratio = (B + (s - 3) X) / (B - 2 X) equals 4 at s = c when X = 3B / (c + 5).
  const double product = margins.sumsq_u * margins.sumsq_v;
  const double rho = margins.a / std::sqrt(product);
  const double one_minus = (1.0 - rho * rho) * (1.0 - rho * rho);
  PairShape shape;
  shape.A = 3.0 * one_minus / (cosine_crossing + 5.0);
  shape.sum_u2v2 = 3.0 * (product + margins.a * margins.a) / (inner_crossing + 5.0);
  return shape;
}

VectorPair GenerateMarginMatchedPair(std::size_t dim, std::size_t support,
                                     const PairMargins& margins,
                                     const PairShape& shape,
                                     std::uint64_t seed) {
  if (support < 3 || support > dim) {
    throw Error(ErrorCode::kInvalidParameter, "need 3 <= support <= D");
  }
  if (!(margins.sumsq_u > 0.0 && margins.sumsq_v > 0.0) ||
      margins.a * margins.a >= margins.sumsq_u * margins.sumsq_v) {
    throw Error(ErrorCode::kInvalidParameter,
                "margins must describe a pair with |rho| < 1");
  }
  MarginPairBuilder builder;
  builder.dim = dim;
  builder.margins = margins;
  const Permutation perm = GeneratePermutation(dim, DeriveSeed(seed, 0));
  builder.positions.assign(perm.mapping.begin(), perm.mapping.begin() + support);
  SplitMix64 gen(DeriveSeed(seed, 1));
  builder.z_tail.resize(support);
  builder.z_noise.resize(support);
  for (std::size_t i = 0; i < support; ++i) {
    builder.z_tail[i] = StandardNormal(gen);
    builder.z_noise[i] = StandardNormal(gen);
  }

  // Zero coordinates do not change the statistics, so the search works on the
  // support alone.
  MarginPairBuilder compact = builder;
  compact.dim = support;
  std::iota(compact.positions.begin(), compact.positions.end(), std::size_t{0});
  auto stats_of = [&](double tail, double noise) {
    const VectorPair p = compact.Build(tail, noise);
    return ComputePairStatistics(p.u, p.v);
  };
  // Clamps to the bracket ends where the target A is out of reach; the final
  // check below rejects a clamped solution.
  constexpr double kNoiseLo = 0.5;
  constexpr double kNoiseHi = 8.0;
  auto noise_for = [&](double tail) {
    auto a_of = [&](double noise) { return stats_of(tail, noise).A; };
    if (a_of(kNoiseLo) >= shape.A) return kNoiseLo;
    if (a_of(kNoiseHi) <= shape.A) return kNoiseHi;
    return SolveIncreasing(a_of, kNoiseLo, kNoiseHi, shape.A, "A");
  };
  auto q_of = [&](double t) { return stats_of(t, noise_for(t)).sum_u2v2; };
  // Wide tails push the smallest reachable A above the target, so grow the
  // upper end only as far as needed.
  double tail_hi = 0.1;
  while (tail_hi < 3.0 && q_of(tail_hi) < shape.sum_u2v2) tail_hi *= 1.25;
  const double tail =
      SolveIncreasing(q_of, 0.05, tail_hi, shape.sum_u2v2, "sum u^2 v^2");
  const double noise = noise_for(tail);
  const PairStatistics st = stats_of(tail, noise);
  if (std::abs(st.A - shape.A) > 1e-9 * shape.A ||
      std::abs(st.sum_u2v2 - shape.sum_u2v2) > 1e-9 * shape.sum_u2v2) {
    throw Error(ErrorCode::kConvergence,
                "pair shape out of reach for these margins and support");
  }
  return builder.Build(tail, noise);
}

VectorPair HongKongLikePair(std::size_t dim, std::size_t support,
                            std::uint64_t seed) {
  return GenerateMarginMatchedPair(
      dim, support, kHongKongMargins,
      ShapeForRatioCrossings(kHongKongMargins, 39.5, 149.5), seed);
}

double TrueValue(Estimator estimator, const PairStatistics& stats) {
  switch (estimator) {
    case Estimator::kDistance:
      return stats.d;
    case Estimator::kCosineNormalized:
    case Estimator::kVsrpCosine:
      return stats.rho;
    case Estimator::kInnerRaw:
    case Estimator::kInnerNormalized:
    case Estimator::kInnerMLE:
    case Estimator::kVsrpInner:
      return stats.a;
  }
  return stats.a;
}

double TheoreticalVariance(Estimator estimator, const PairStatistics& stats,
                           std::size_t k, double s, Scheme scheme,
                           std::size_t repetitions) {
  const double m = static_cast<double>(repetitions);
  switch (estimator) {
    case Estimator::kInnerRaw:
      return VarInner(stats, k, s, scheme, repetitions);
    case Estimator::kDistance:
      return VarDistance(stats, k, s, scheme) / m;
    case Estimator::kCosineNormalized:
      return VarCosine(stats, k, s, scheme) / m;
    case Estimator::kInnerNormalized:
      return VarNormalizedInner(stats, k, s, scheme) / m;
    case Estimator::kInnerMLE:
      return std::numeric_limits<double>::quiet_NaN();
    case Estimator::kVsrpInner:
      return VarInnerVsrp(stats, k, s);
    case Estimator::kVsrpCosine:
      return VarCosineVsrp(stats, k, s);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<SweepRow> MseSweep(std::span<const double> u,
                               std::span<const double> v,
                               const SweepOptions& options) {
  if (options.trials < 100) {
    throw Error(ErrorCode::kInvalidParameter, "a sweep needs at least 100 trials");
  }
  if (options.estimators.empty() || options.ks.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "sweep needs estimators and k values");
  }
  const PairStatistics stats = ComputePairStatistics(u, v);
  const double s = FourthMoment(options.dist);
  bool need_oporp = false;
  bool need_vsrp = false;
  for (Estimator e : options.estimators) {
    (UsesVsrpSketch(e) ? need_vsrp : need_oporp) = true;
  }

  std::vector<SweepRow> rows;
  for (std::size_t k : options.ks) {
    SketchConfig oporp_config;
    oporp_config.dim = u.size();
    oporp_config.k = k;
    oporp_config.scheme = options.scheme;
    oporp_config.dist = options.dist;
    oporp_config.repetitions = options.repetitions;
    SketchConfig vsrp_config = oporp_config;
    vsrp_config.scheme = Scheme::kVsrp;
    vsrp_config.repetitions = 1;
    if (need_oporp) oporp_config.Validate();
    if (need_vsrp) vsrp_config.Validate();

    const std::size_t num_est = options.estimators.size();
    std::vector<double> estimates(num_est * options.trials);
    const std::uint64_t k_seed = DeriveSeed(options.seed, k);
    ParallelFor(options.trials, options.threads, [&](std::size_t t) {
      const std::uint64_t trial_seed = DeriveSeed(k_seed, t);
      Sketch x, y, xv, yv;
      if (need_oporp) {
        SketchConfig config = oporp_config;
        config.seed = DeriveSeed(trial_seed, 0);
        const OporpSketcher sketcher(config);
        x = sketcher.Apply(u);
        y = sketcher.Apply(v);
      }
      if (need_vsrp) {
        SketchConfig config = vsrp_config;
        config.seed = DeriveSeed(trial_seed, 1);
        xv = VsrpSketch(u, config);
        yv = VsrpSketch(v, config);
      }
      for (std::size_t e = 0; e < num_est; ++e) {
        const Estimator est = options.estimators[e];
        const bool vsrp = UsesVsrpSketch(est);
        estimates[e * options.trials + t] =
            Estimate(est, vsrp ? xv : x, vsrp ? yv : y).value;
      }
    });

    for (std::size_t e = 0; e < num_est; ++e) {
      const Estimator est = options.estimators[e];
      const double truth = TrueValue(est, stats);
      const std::span<const double> values(estimates.data() + e * options.trials,
                                           options.trials);
      const double n = static_cast<double>(options.trials);
      double mean = 0.0;
      for (double x : values) mean += x;
      mean /= n;
      double var = 0.0;
      for (double x : values) var += (x - mean) * (x - mean);
      var /= n;
      SweepRow row;
      row.k = k;
      row.s = s;
      row.scheme = UsesVsrpSketch(est) ? Scheme::kVsrp : options.scheme;
      row.estimator = est;
      row.repetitions = UsesVsrpSketch(est) ? 1 : options.repetitions;
      row.trials = options.trials;
      row.empirical_mean = mean;
      row.true_value = truth;
      row.empirical_bias = mean - truth;
      // var + bias^2 is the MSE and keeps MSE >= bias^2 exact in floating point.
      row.empirical_mse = var + row.empirical_bias * row.empirical_bias;
      row.theoretical_var =
          TheoreticalVariance(est, stats, k, s, row.scheme, row.repetitions);
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<PRPoint> RetrievalEval(const Matrix& base, const Matrix& queries,
                                   const SketchConfig& config,
                                   RankingMethod method, std::size_t top_n) {
  if (top_n == 0 || top_n > base.rows) {
    throw Error(ErrorCode::kInvalidParameter, "need 1 <= topN <= #base");
  }
  const Scorer scorer(base, queries, config, method);
  std::vector<PRPoint> curve(base.rows);
  std::vector<char> is_gold(base.rows);
  for (std::size_t q = 0; q < queries.rows; ++q) {
    std::vector<double> exact(base.rows);
    for (std::size_t i = 0; i < base.rows; ++i) {
      exact[i] = ExactCosine(queries.Row(q), base.Row(i));
    }
    const std::vector<std::size_t> gold = RankDescending(exact);
    std::fill(is_gold.begin(), is_gold.end(), 0);
    for (std::size_t i = 0; i < top_n; ++i) is_gold[gold[i]] = 1;

    const std::vector<std::size_t> ranked =
        method ? RankDescending(scorer.Scores(q)) : gold;
    std::size_t hits = 0;
    for (std::size_t n = 0; n < ranked.size(); ++n) {
      hits += is_gold[ranked[n]];
      curve[n].precision += static_cast<double>(hits) / static_cast<double>(n + 1);
      curve[n].recall += static_cast<double>(hits) / static_cast<double>(top_n);
    }
  }
  for (PRPoint& p : curve) {
    p.precision /= static_cast<double>(queries.rows);
    p.recall /= static_cast<double>(queries.rows);
  }
  return curve;
}

double AreaUnderPr(std::span<const PRPoint> curve) {
  double area = 0.0;
  double prev_recall = 0.0;
  for (const PRPoint& p : curve) {
    area += p.precision * (p.recall - prev_recall);
    prev_recall = p.recall;
  }
  return area;
}

double KnnEval(const Matrix& train, std::span<const int> train_labels,
               const Matrix& test, std::span<const int> test_labels,
               std::size_t neighbors, const SketchConfig& config,
               RankingMethod method) {
  if (train_labels.size() != train.rows || test_labels.size() != test.rows) {
    throw Error(ErrorCode::kDimensionMismatch, "labels do not align with rows");
  }
  if (neighbors == 0 || neighbors > train.rows) {
    throw Error(ErrorCode::kInvalidParameter, "need 1 <= K <= #train");
  }
  const Scorer scorer(train, test, config, method);
  std::size_t correct = 0;
  for (std::size_t q = 0; q < test.rows; ++q) {
    const std::vector<std::size_t> ranked = RankDescending(scorer.Scores(q));
    std::map<int, std::size_t> votes;
    for (std::size_t n = 0; n < neighbors; ++n) ++votes[train_labels[ranked[n]]];
    // std::map iterates labels ascending, so the first maximum is the smallest.
    int best_label = votes.begin()->first;
    std::size_t best_votes = 0;
    for (const auto& [label, count] : votes) {
      if (count > best_votes) {
        best_votes = count;
        best_label = label;
      }
    }
    if (best_label == test_labels[q]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.rows);
}

LabeledData GenerateClusteredData(std::size_t num_clusters, std::size_t dim,
                                  std::size_t count, double spread,
                                  std::uint64_t seed) {
  if (num_clusters == 0 || dim == 0 || count == 0) {
    throw Error(ErrorCode::kInvalidParameter, "clusters, D and count must be >= 1");
  }
  SplitMix64 gen(seed);
  Matrix centers(num_clusters, dim);
  for (double& x : centers.data) x = StandardNormal(gen);
  LabeledData out;
  out.points = Matrix(count, dim);
  out.labels.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t c = i % num_clusters;
    out.labels[i] = static_cast<int>(c);
    std::span<double> row = out.points.Row(i);
    for (std::size_t j = 0; j < dim; ++j) {
      row[j] = centers.data[c * dim + j] + spread * StandardNormal(gen);
    }
    ScaleToUnit(row);
  }
  return out;
}

}  // namespace oporp
