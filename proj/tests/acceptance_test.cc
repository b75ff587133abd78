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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "enumeration.h"
#include "oporp/error.h"
#include "oporp/estimate.h"
#include "oporp/experiment.h"
#include "oporp/privacy.h"
#include "oporp/sketch.h"
#include "oporp/variance.h"

namespace oporp {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string Fmt(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<double> GaussianVector(std::size_t dim, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  std::vector<double> out(dim);
  for (double& x : out) x = normal(gen);
  return out;
}

// 1. Inner-product variance at D = 64, 10^5 trials per point.
Outcome InnerVarianceAgreement() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double rho : {0.5, 0.9}) {
    const VectorPair pair = GeneratePairWithCosine(64, rho, 1e-3, 100 + rho * 10);
    for (const ProjectionDistribution& dist :
         {ProjectionDistribution::Rademacher(), ProjectionDistribution::Gaussian()}) {
      for (Scheme scheme : {Scheme::kFixedLength, Scheme::kVariableLength}) {
        SweepOptions opt;
        opt.ks = {2, 4, 8, 16, 32};
        opt.dist = dist;
        opt.scheme = scheme;
        opt.trials = 100000;
        opt.seed = 1;
        for (const SweepRow& row : MseSweep(pair.u, pair.v, opt)) {
          const double rel =
              std::abs(row.empirical_mse - row.theoretical_var) / row.theoretical_var;
          worst = std::max(worst, rel);
          out.Require(rel <= 0.03,
                      Fmt("rho=%g s=%g k=%g", rho, row.s, row.k) + " " +
                          std::string(SchemeName(scheme)) + Fmt(" rel=%.4f", rel));
        }
      }
    }
  }
  const double secs = Seconds(start);
  out.Require(secs < 120.0, Fmt("runtime %.1fs", secs));
  out.detail = Fmt("max rel err %.4f (tol 0.03), %.1fs (limit 120s)", worst, secs) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 2. Fixed-length binning reduces variance by (D - k) / (D - 1).
Outcome FixedVersusVariable() {
  Outcome out;
  const VectorPair pair = GeneratePairWithCosine(256, 0.5, 1e-3, 2);
  double mse[2];
  int i = 0;
  for (Scheme scheme : {Scheme::kFixedLength, Scheme::kVariableLength}) {
    SweepOptions opt;
    opt.ks = {64};
    opt.scheme = scheme;
    opt.trials = 100000;
    opt.seed = 2;
    mse[i++] = MseSweep(pair.u, pair.v, opt)[0].empirical_mse;
  }
  const double ratio = mse[0] / mse[1];
  const double want = 192.0 / 255.0;
  const double rel = std::abs(ratio - want) / want;
  out.Require(rel <= 0.05, "ratio off");
  out.detail = Fmt("Fixed/Variable = %.4f, want %.4f, rel err %.4f (tol 0.05)", ratio,
                   want, rel);
  return out;
}

// 3. k = D recovers every estimator exactly.
Outcome ExactRecovery() {
  Outcome out;
  std::mt19937_64 gen(3);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 16 + 8 * (t % 16);
    const auto u = GaussianVector(dim, gen);
    const auto v = GaussianVector(dim, gen);
    double a = 0.0, d = 0.0, uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      a += u[i] * v[i];
      d += (u[i] - v[i]) * (u[i] - v[i]);
      uu += u[i] * u[i];
      vv += v[i] * v[i];
    }
    const double rho = a / std::sqrt(uu * vv);
    SketchConfig config;
    config.dim = dim;
    config.k = dim;
    config.seed = t;
    const OporpSketcher sketcher(config);
    const Sketch x = sketcher.Apply(u), y = sketcher.Apply(v);
    const std::pair<Estimator, double> cases[] = {
        {Estimator::kInnerRaw, a},
        {Estimator::kDistance, d},
        {Estimator::kCosineNormalized, rho},
        {Estimator::kInnerMLE, a}};
    for (const auto& [e, want] : cases) {
      const double rel = std::abs(Estimate(e, x, y).value - want) / std::abs(want);
      worst = std::max(worst, rel);
      out.Require(rel <= 1e-9, std::string(EstimatorName(e)) + Fmt(" rel=%g", rel));
    }
  }
  out.detail = Fmt("100 pairs, max rel err %.3g (tol 1e-9)", worst) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 4 and 5 share the D = 1024 sweeps.
struct CosineSweeps {
  std::vector<SweepRow> rho05;
  std::vector<SweepRow> rho09;
};

CosineSweeps RunCosineSweeps() {
  CosineSweeps out;
  for (double rho : {0.5, 0.9}) {
    const VectorPair pair = GeneratePairWithCosine(1024, rho, 1e-3, 4);
    SweepOptions opt;
    opt.ks = {16, 32, 64, 128, 256};
    opt.estimators = {Estimator::kInnerRaw, Estimator::kCosineNormalized};
    opt.trials = 100000;
    opt.seed = 4;
    (rho == 0.5 ? out.rho05 : out.rho09) = MseSweep(pair.u, pair.v, opt);
  }
  return out;
}

Outcome CosineVarianceAgreement(const CosineSweeps& sweeps) {
  Outcome out;
  double worst_rel = 0.0, worst_bias = 0.0;
  for (const auto* rows : {&sweeps.rho05, &sweeps.rho09}) {
    for (const SweepRow& row : *rows) {
      if (row.estimator != Estimator::kCosineNormalized) continue;
      const double bias_share =
          row.empirical_bias * row.empirical_bias / row.empirical_mse;
      worst_bias = std::max(worst_bias, bias_share);
      out.Require(bias_share <= 0.05, Fmt("k=%g bias^2/MSE=%.4f", row.k, bias_share));
      if (row.k < 64) continue;
      const double rel =
          std::abs(row.empirical_mse - row.theoretical_var) / row.theoretical_var;
      worst_rel = std::max(worst_rel, rel);
      out.Require(rel <= 0.10,
                  Fmt("rho=%.2f k=%g rel=%.4f", row.true_value, row.k, rel));
    }
  }
  out.detail = Fmt("k>=64 max rel err %.4f (tol 0.10); k>=16 max bias^2/MSE %.4f (tol 0.05)",
                   worst_rel, worst_bias) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome NormalizationDominance(const CosineSweeps& sweeps) {
  Outcome out;
  double min_ratio = INFINITY;
  for (std::size_t i = 0; i + 1 < sweeps.rho09.size(); i += 2) {
    const SweepRow& inner = sweeps.rho09[i];
    const SweepRow& cosine = sweeps.rho09[i + 1];
    min_ratio = std::min(min_ratio, inner.empirical_mse / cosine.empirical_mse);
    out.Require(cosine.empirical_mse < inner.empirical_mse,
                Fmt("rho=0.9 k=%g: MSE(cos)=%g >= MSE(inner)=%g", inner.k,
                    cosine.empirical_mse, inner.empirical_mse));
  }
  const VectorPair pair = GeneratePairWithCosine(1024, 0.99, 1e-4, 5);
  const PairStatistics st = ComputePairStatistics(pair.u, pair.v);
  const double oracle = VarInner(st, 256, 1.0, Scheme::kFixedLength) /
                        VarCosine(st, 256, 1.0, Scheme::kFixedLength);
  const double rho2 = st.rho * st.rho;
  const double leading = (1.0 + rho2) / ((1.0 - rho2) * (1.0 - rho2));
  SweepOptions opt;
  opt.ks = {256};
  opt.estimators = {Estimator::kInnerRaw, Estimator::kCosineNormalized};
  opt.trials = 20000;
  opt.seed = 5;
  const auto rows = MseSweep(pair.u, pair.v, opt);
  const double ratio = rows[0].empirical_mse / rows[1].empirical_mse;
  out.Require(ratio > 10.0, Fmt("rho=0.99 ratio %.2f", ratio));
  out.detail = Fmt("rho=0.9 min MSE(a)/MSE(rho) %.2f; rho=0.99 k=256 ratio %.1f", min_ratio,
                   ratio) +
               Fmt(" (oracle %.1f, (1+r^2)/(1-r^2)^2 = %.1f, need > 10)", oracle, leading) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 6. VSRP versus OPORP with one bin, and the VSRP variance formulas.
Outcome VsrpEquivalence() {
  Outcome out;
  const VectorPair pair = HongKongLikePair();
  std::string detail;
  for (double s : {1.0, 10.0}) {
    SweepOptions oporp;
    oporp.ks = {1};
    oporp.repetitions = 64;
    oporp.dist = ProjectionDistribution::Sparse(s);
    oporp.trials = 40000;
    oporp.seed = 6;
    const double mse_oporp = MseSweep(pair.u, pair.v, oporp)[0].empirical_mse;
    SweepOptions vsrp = oporp;
    vsrp.ks = {64};
    vsrp.repetitions = 1;
    vsrp.estimators = {Estimator::kVsrpInner};
    vsrp.seed = 7;
    const double mse_vsrp = MseSweep(pair.u, pair.v, vsrp)[0].empirical_mse;
    const double rel = std::abs(mse_vsrp - mse_oporp) / mse_oporp;
    out.Require(rel <= 0.05, Fmt("s=%g VSRP vs OPORP(k=1,m=64) rel=%.4f", s, rel));
    detail += Fmt("s=%g: VSRP/OPORP(k=1,m=k) rel %.4f", s, rel);

    SweepOptions big = vsrp;
    big.ks = {1024};
    big.estimators = {Estimator::kVsrpInner, Estimator::kVsrpCosine};
    big.trials = 10000;
    big.seed = 8;
    const auto rows = MseSweep(pair.u, pair.v, big);
    const double rel_inner =
        std::abs(rows[0].empirical_mse - rows[0].theoretical_var) / rows[0].theoretical_var;
    const double rel_cos =
        std::abs(rows[1].empirical_mse - rows[1].theoretical_var) / rows[1].theoretical_var;
    out.Require(rel_inner <= 0.05, Fmt("s=%g k=1024 inner rel=%.4f", s, rel_inner));
    out.Require(rel_cos <= 0.15, Fmt("s=%g k=1024 cosine rel=%.4f", s, rel_cos));
    detail += Fmt(", k=1024 inner rel %.4f, cosine rel %.4f; ", rel_inner, rel_cos);
  }
  detail += "tol 0.05/0.05/0.15";
  out.detail = detail + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 7. Variance ratios start at 1 and increase with s.
Outcome RatioEndpoints() {
  Outcome out;
  std::mt19937_64 gen(7);
  std::vector<PairStatistics> pairs;
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 8 + t;
    pairs.push_back(ComputePairStatistics(GaussianVector(dim, gen), GaussianVector(dim, gen)));
  }
  const VectorPair hk = HongKongLikePair();
  pairs.push_back(ComputePairStatistics(hk.u, hk.v));
  for (const PairStatistics& st : pairs) {
    for (RatioKind kind : {RatioKind::kInner, RatioKind::kCosine}) {
      out.Require(VarianceRatio(st, 1.0, kind) == 1.0, "ratio(s=1) != 1");
      double prev = VarianceRatio(st, 1.0, kind);
      for (int s = 2; s <= 200; ++s) {
        const double r = VarianceRatio(st, s, kind);
        out.Require(r > prev, Fmt("not increasing at s=%g", s));
        prev = r;
      }
    }
  }
  out.detail = "101 pairs, both ratios == 1 at s=1 and strictly increasing on s=1..200";
  return out;
}

// 8. Exhaustive enumeration for D <= 8.
Outcome IndicatorEnumeration() {
  Outcome out;
  std::mt19937_64 gen(8);
  double worst_moment = 0.0, worst_var = 0.0;
  int cases = 0;
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    for (std::size_t k = 1; k <= dim; ++k) {
      if (dim % k != 0) continue;
      ++cases;
      const auto want = ::oporp::testing::EnumerateFixedBinMoments(dim, k);
      const IndicatorMoments got = IndicatorMomentsFor(dim, k, Scheme::kFixedLength);
      // Pair moments need two distinct coordinates, so D = 1 checks only one.
      const double moment_err =
          std::max({std::abs(got.single - want.single),
                    dim > 1 ? std::abs(got.same_bin - want.same_bin) : 0.0,
                    k > 1 ? std::abs(got.diff_bin - want.diff_bin) : 0.0});
      worst_moment = std::max(worst_moment, moment_err);
      // Equal up to rounding of the two division orders.
      out.Require(moment_err <= 4e-16, Fmt("moments D=%g k=%g err=%g", dim, k, moment_err));

      const auto u = GaussianVector(dim, gen);
      const auto v = GaussianVector(dim, gen);
      const auto brute = ::oporp::testing::EnumerateInnerProduct(u, v, k);
      const double theory =
          VarInner(ComputePairStatistics(u, v), k, 1.0, Scheme::kFixedLength);
      const double err = std::abs(brute.variance - theory);
      worst_var = std::max(worst_var, err);
      out.Require(err <= 1e-12, Fmt("variance D=%g k=%g err=%g", dim, k, err));
    }
  }
  out.detail = Fmt("%g (D,k) cases; max moment err %.2g; max variance err %.2g (tol 1e-12)",
                   cases, worst_moment, worst_var) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 9. Private mechanisms.
Outcome DpMechanics() {
  Outcome out;
  double worst_residual = 0.0;
  for (double eps : {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (double delta : {1e-10, 1e-8, 1e-6, 1e-4, 1e-2, 0.1}) {
      const double sigma = SolveGaussianSigma(1.0, eps, delta);
      const double residual = std::abs(GaussianMechanismDelta(1.0, eps, sigma) - delta);
      worst_residual = std::max(worst_residual, residual);
      out.Require(residual < 1e-12, Fmt("residual eps=%g delta=%g", eps, delta));
      if (eps <= 1.0) {
        out.Require(sigma <= ClassicalGaussianSigma(1.0, eps, delta),
                    Fmt("sigma above classical eps=%g delta=%g", eps, delta));
      }
    }
  }

  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> u(1024);
  for (double& x : u) x = unif(gen);
  SketchConfig config;
  config.dim = 1024;
  config.k = 512;
  config.seed = 9;
  const Sketch clean = OporpSketch(u, config);
  long long flips = 0, bits = 0;
  for (std::uint64_t noise = 0; noise < 2000; ++noise) {
    const SignSketch s = DpSignOporpRr(u, config, std::log(3.0), noise);
    for (std::size_t j = 0; j < config.k; ++j) {
      if (clean.values[j] == 0.0) continue;
      flips += s.bits[j] != (clean.values[j] > 0.0 ? 1 : -1);
      ++bits;
    }
  }
  const double rate = static_cast<double>(flips) / bits;
  out.Require(bits >= 1000000, Fmt("only %g bits", static_cast<double>(bits)));
  out.Require(std::abs(rate - 0.25) <= 0.002, Fmt("flip rate %.5f", rate));

  int compared = 0;
  for (double beta : {0.1, 0.5, 1.0, 2.0}) {
    const SignSketch rr = DpSignOporpRr(u, config, 1.0, 1);
    const SignSketch smooth = DpSignOporpRrSmooth(u, config, 1.0, beta, 1);
    for (std::size_t j = 0; j < config.k; ++j) {
      if (std::abs(clean.values[j]) < beta) continue;
      ++compared;
      out.Require(smooth.flip_probs[j] <= rr.flip_probs[j],
                  Fmt("smooth > rr at beta=%g j=%g", beta, j));
    }
  }
  out.detail = Fmt("max residual %.2g (tol 1e-12); flip rate %.5f over %g bits", worst_residual,
                   rate, bits) +
               Fmt(" (0.25 +- 0.002); %g smooth<=rr comparisons", compared) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 10. Retrieval ordering on clustered data.
Outcome RetrievalOrdering() {
  Outcome out;
  constexpr std::size_t kDim = 256, kBase = 2000, kQueries = 200, kK = 32, kTopN = 20;
  double aupr_cos = 0.0, aupr_inner = 0.0, aupr_vsrp = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const LabeledData all = GenerateClusteredData(3, kDim, kBase + kQueries, 1.0, 100 + seed);
    Matrix base(kBase, kDim), queries(kQueries, kDim);
    std::copy_n(all.points.data.begin(), kBase * kDim, base.data.begin());
    std::copy(all.points.data.begin() + kBase * kDim, all.points.data.end(),
              queries.data.begin());
    SketchConfig oporp;
    oporp.dim = kDim;
    oporp.k = kK;
    oporp.seed = seed;
    SketchConfig vsrp = oporp;
    vsrp.scheme = Scheme::kVsrp;
    vsrp.dist = ProjectionDistribution::Sparse(100.0);
    aupr_cos += AreaUnderPr(
        RetrievalEval(base, queries, oporp, Estimator::kCosineNormalized, kTopN));
    aupr_inner +=
        AreaUnderPr(RetrievalEval(base, queries, oporp, Estimator::kInnerRaw, kTopN));
    aupr_vsrp +=
        AreaUnderPr(RetrievalEval(base, queries, vsrp, Estimator::kVsrpInner, kTopN));
  }
  aupr_cos /= 5;
  aupr_inner /= 5;
  aupr_vsrp /= 5;
  out.Require(aupr_cos >= aupr_inner, "AUPR(cosine) < AUPR(inner)");
  out.Require(aupr_inner >= aupr_vsrp, "AUPR(inner) < AUPR(vsrp s=100)");
  out.detail = Fmt("AUPR cosine %.4f >= inner %.4f >= vsrp(s=100) %.4f", aupr_cos,
                   aupr_inner, aupr_vsrp) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

int Main() {
  const CosineSweeps* sweeps = nullptr;
  CosineSweeps storage;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"inner product variance matches the closed form (D=64)", InnerVarianceAgreement},
      {"fixed/variable MSE ratio equals (D-k)/(D-1)", FixedVersusVariable},
      {"exact recovery at k=D", ExactRecovery},
      {"cosine estimator variance and bias (D=1024)",
       [&] {
         storage = RunCosineSweeps();
         sweeps = &storage;
         return CosineVarianceAgreement(*sweeps);
       }},
      {"normalized estimator dominates the raw inner product",
       [&] {
         if (sweeps == nullptr) {
           storage = RunCosineSweeps();
           sweeps = &storage;
         }
         return NormalizationDominance(*sweeps);
       }},
      {"VSRP equals single-bin OPORP and matches its variance", VsrpEquivalence},
      {"VSRP/OPORP variance ratio endpoints", RatioEndpoints},
      {"indicator moments and variance by exhaustive enumeration", IndicatorEnumeration},
      {"private mechanism calibration and flip rates", DpMechanics},
      {"retrieval AUPR ordering on clustered data", RetrievalOrdering},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (!result.pass) ++failures;
    std::printf("[%s] criterion %zu: %s -- %s [%.1fs]\n", result.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first, result.detail.c_str(), Seconds(start));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace oporp

int main() { return oporp::Main(); }
