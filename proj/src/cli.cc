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

#include "oporp/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oporp/error.h"
#include "oporp/estimate.h"
#include "oporp/experiment.h"
#include "oporp/matrix.h"
#include "oporp/privacy.h"
#include "oporp/sketch.h"
#include "oporp/sketch_io.h"
#include "oporp/variance.h"

namespace oporp {
namespace {

struct SketchFlags {
  std::size_t k = 64;
  std::string scheme = "fixed";
  std::string dist = "rademacher";
  double s = 1.0;
  std::size_t m = 1;
  std::uint64_t seed = 0;

  void Add(CLI::App* app) {
    app->add_option("--k", k, "Samples per repetition")->capture_default_str();
    app->add_option("--scheme", scheme, "fixed | variable | vsrp")
        ->capture_default_str();
    app->add_option("--dist", dist, "rademacher | gaussian | uniform | sparse")
        ->capture_default_str();
    app->add_option("--s", s, "Sparsity for --dist sparse and vsrp")
        ->capture_default_str();
    app->add_option("--m", m, "Independent repetitions")->capture_default_str();
    app->add_option("--seed", seed, "Sketch seed")->capture_default_str();
  }

  SketchConfig Build(std::size_t dim) const {
    SketchConfig config;
    config.dim = dim;
    config.k = k;
    config.scheme = ParseScheme(scheme);
    // VSRP is defined by its sparsity alone.
    config.dist = config.scheme == Scheme::kVsrp
                      ? ProjectionDistribution::Sparse(s)
                      : ProjectionDistribution::FromName(dist, s);
    config.repetitions = m;
    config.seed = seed;
    config.Validate();
    return config;
  }
};

struct PairFlags {
  std::string input;
  bool hong_kong = false;
  std::size_t dim = 1024;
  double rho = 0.9;
  double tol = 1e-3;
  std::uint64_t pair_seed = 1;

  void Add(CLI::App* app) {
    app->add_option("--input", input,
                    "Matrix file whose first two rows are the pair");
    app->add_flag("--hong-kong", hong_kong,
                  "Synthetic pair with HONG/KONG margins (D = 65536)");
    app->add_option("--D", dim, "Dimension of the synthetic pair")
        ->capture_default_str();
    app->add_option("--rho", rho, "Target cosine of the synthetic pair")
        ->capture_default_str();
    app->add_option("--tol", tol, "Cosine tolerance of the synthetic pair")
        ->capture_default_str();
    app->add_option("--pair-seed", pair_seed, "Seed of the synthetic pair")
        ->capture_default_str();
  }

  VectorPair Load() const {
    if (!input.empty()) {
      const Matrix m = ReadMatrix(input);
      if (m.rows < 2) {
        throw Error(ErrorCode::kParse, input + ": need at least two rows");
      }
      const auto u = m.Row(0);
      const auto v = m.Row(1);
      return {{u.begin(), u.end()}, {v.begin(), v.end()}};
    }
    if (hong_kong) return HongKongLikePair(65536, 128, pair_seed);
    return GeneratePairWithCosine(dim, rho, tol, pair_seed);
  }
};

struct DataFlags {
  std::size_t clusters = 3;
  std::size_t dim = 256;
  double spread = 1.0;
  std::uint64_t data_seed = 1;

  void Add(CLI::App* app) {
    app->add_option("--clusters", clusters, "Synthetic data: cluster count")
        ->capture_default_str();
    app->add_option("--D", dim, "Synthetic data: dimension")
        ->capture_default_str();
    app->add_option("--spread", spread, "Synthetic data: noise around centers")
        ->capture_default_str();
    app->add_option("--data-seed", data_seed, "Synthetic data: seed")
        ->capture_default_str();
  }

  // Rows [0, first) and [first, first + second) of one clustered draw.
  std::pair<LabeledData, LabeledData> Generate(std::size_t first,
                                               std::size_t second) const {
    const LabeledData all =
        GenerateClusteredData(clusters, dim, first + second, spread, data_seed);
    std::pair<LabeledData, LabeledData> out;
    out.first.points = Matrix(first, dim);
    out.second.points = Matrix(second, dim);
    std::copy_n(all.points.data.begin(), first * dim,
                out.first.points.data.begin());
    std::copy(all.points.data.begin() + first * dim, all.points.data.end(),
              out.second.points.data.begin());
    out.first.labels.assign(all.labels.begin(), all.labels.begin() + first);
    out.second.labels.assign(all.labels.begin() + first, all.labels.end());
    return out;
  }
};

RankingMethod ParseMethod(const std::string& name) {
  if (name == "exact") return std::nullopt;
  return ParseEstimator(name);
}

std::vector<double> LoadRow(const std::string& path, std::size_t row) {
  const Matrix m = ReadMatrix(path);
  if (row >= m.rows) {
    throw Error(ErrorCode::kInvalidParameter,
                path + " has " + std::to_string(m.rows) + " rows");
  }
  const auto r = m.Row(row);
  return {r.begin(), r.end()};
}

void WithOutput(const std::string& path, std::ostream& fallback,
                const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  body(file);
  if (!file) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

std::string JoinCsv(std::initializer_list<std::string> fields) {
  std::string line;
  for (const std::string& f : fields) {
    if (!line.empty()) line += ',';
    line += f;
  }
  return line + '\n';
}

std::string Str(std::size_t n) { return std::to_string(n); }

class Cli {
 public:
  explicit Cli(std::ostream& out) : out_(out), app_("OPORP and VSRP sketching", "oporp") {
    app_.require_subcommand(1);
    AddSketch();
    AddEstimate();
    AddVariance();
    AddSimulate();
    AddRetrieval();
    AddKnn();
    AddDp();
  }

  CLI::App& app() { return app_; }

  void Dispatch() {
    for (const auto& [sub, fn] : handlers_) {
      if (sub->parsed()) fn();
    }
  }

 private:
  void AddSketch() {
    CLI::App* sub = app_.add_subcommand("sketch", "Sketch one row of a matrix file");
    sub->add_option("--input", sketch_.input, "CSV or binary matrix")->required();
    sub->add_option("--row", sketch_.row, "Row to sketch")->capture_default_str();
    sub->add_option("--output", sketch_.output, "Sketch file")->required();
    sketch_.flags.Add(sub);
    handlers_.emplace_back(sub, [this] { RunSketch(); });
  }

  void RunSketch() {
    const std::vector<double> u = LoadRow(sketch_.input, sketch_.row);
    WriteSketch(sketch_.output, MakeSketch(u, sketch_.flags.Build(u.size())));
  }

  void AddEstimate() {
    CLI::App* sub =
        app_.add_subcommand("estimate", "Estimate a similarity from two sketch files");
    sub->add_option("--x", estimate_.x, "First sketch file")->required();
    sub->add_option("--y", estimate_.y, "Second sketch file")->required();
    sub->add_option("--estimator", estimate_.estimator,
                    "inner | distance | cosine | inner_normalized | inner_mle | "
                    "vsrp_inner | vsrp_cosine | sign_agreement")
        ->capture_default_str();
    handlers_.emplace_back(sub, [this] { RunEstimate(); });
  }

  void RunEstimate() {
    const SketchFile x = ReadSketchFile(estimate_.x);
    const SketchFile y = ReadSketchFile(estimate_.y);
    const bool x_sign = x.value_type == SketchValueType::kSign;
    const bool y_sign = y.value_type == SketchValueType::kSign;
    double value = 0.0;
    if (estimate_.estimator == "sign_agreement") {
      if (!x_sign || !y_sign) {
        throw Error(ErrorCode::kIncompatibleSketch,
                    "sign_agreement needs two sign sketch files");
      }
      SignSketch a{x.signs, {}, x.sketch.config};
      SignSketch b{y.signs, {}, y.sketch.config};
      if (!(a.config == b.config)) {
        throw Error(ErrorCode::kIncompatibleSketch, "sketch configs differ");
      }
      value = SignSimilarity(a, b);
    } else {
      if (x_sign || y_sign) {
        throw Error(ErrorCode::kIncompatibleSketch,
                    "sign sketches support only sign_agreement");
      }
      value = Estimate(ParseEstimator(estimate_.estimator), x.sketch, y.sketch)
                  .value;
    }
    out_ << "estimator,value\n" << estimate_.estimator << ',' << FormatDouble(value)
         << '\n';
  }

  void AddVariance() {
    CLI::App* sub = app_.add_subcommand(
        "variance", "Closed-form estimator variances over a (k, s, scheme) grid");
    variance_.pair.Add(sub);
    sub->add_option("--k", variance_.ks, "Comma-separated k values")
        ->delimiter(',')
        ->required();
    sub->add_option("--s", variance_.ss, "Comma-separated s values")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--scheme", variance_.schemes, "fixed and/or variable")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--m", variance_.m, "Repetitions")->capture_default_str();
    sub->add_option("--estimators", variance_.estimators,
                    "Comma-separated estimator names")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--output", variance_.output, "CSV path (default stdout)");
    handlers_.emplace_back(sub, [this] { RunVariance(); });
  }

  void RunVariance() {
    const VectorPair pair = variance_.pair.Load();
    const PairStatistics stats = ComputePairStatistics(pair.u, pair.v);
    std::vector<Estimator> estimators;
    for (const std::string& name : variance_.estimators) {
      const Estimator e = ParseEstimator(name);
      if (e == Estimator::kInnerMLE) {
        throw Error(ErrorCode::kUnsupported, "inner_mle has no closed-form variance");
      }
      estimators.push_back(e);
    }
    if (variance_.m == 0) {
      throw Error(ErrorCode::kInvalidParameter, "--m must be >= 1");
    }
    std::vector<VarianceReport> reports;
    for (std::size_t k : variance_.ks) {
      if (k == 0) throw Error(ErrorCode::kInvalidParameter, "k must be >= 1");
      for (double s : variance_.ss) {
        if (!(s >= 1.0)) throw Error(ErrorCode::kInvalidParameter, "s must be >= 1");
        for (Estimator e : estimators) {
          if (UsesVsrpSketch(e)) {
            reports.push_back({std::string(EstimatorName(e)), k, s, 1,
                               Scheme::kVsrp,
                               TheoreticalVariance(e, stats, k, s, Scheme::kVsrp, 1)});
            continue;
          }
          for (const std::string& name : variance_.schemes) {
            const Scheme scheme = ParseScheme(name);
            if (scheme == Scheme::kVsrp) {
              throw Error(ErrorCode::kInvalidParameter,
                          "--scheme takes fixed or variable; use vsrp_* estimators");
            }
            reports.push_back(
                {std::string(EstimatorName(e)), k, s, variance_.m, scheme,
                 TheoreticalVariance(e, stats, k, s, scheme, variance_.m)});
          }
        }
      }
    }
    WithOutput(variance_.output, out_, [&](std::ostream& os) {
      os << "estimator,k,s,repetitions,scheme,value\n";
      for (const VarianceReport& r : reports) {
        os << JoinCsv({r.estimator, Str(r.k), FormatDouble(r.s),
                       Str(r.repetitions), std::string(SchemeName(r.scheme)),
                       FormatDouble(r.value)});
      }
    });
  }

  void AddSimulate() {
    CLI::App* sub = app_.add_subcommand(
        "simulate", "Monte-Carlo MSE sweep against the closed-form variances");
    simulate_.pair.Add(sub);
    sub->add_option("--k", simulate_.ks, "Comma-separated k values")
        ->delimiter(',')
        ->required();
    sub->add_option("--scheme", simulate_.scheme, "fixed | variable")
        ->capture_default_str();
    sub->add_option("--dist", simulate_.dist,
                    "rademacher | gaussian | uniform | sparse")
        ->capture_default_str();
    sub->add_option("--s", simulate_.s, "Sparsity for --dist sparse and vsrp_*")
        ->capture_default_str();
    sub->add_option("--m", simulate_.m, "Repetitions")->capture_default_str();
    sub->add_option("--estimators", simulate_.estimators,
                    "Comma-separated estimator names")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--trials", simulate_.trials, "Trials per (k, estimator)")
        ->capture_default_str();
    sub->add_option("--seed", simulate_.seed, "Monte-Carlo seed")
        ->capture_default_str();
    sub->add_option("--threads", simulate_.threads, "Worker threads, 0 = all cores")
        ->capture_default_str();
    sub->add_option("--output", simulate_.output, "CSV path (default stdout)");
    handlers_.emplace_back(sub, [this] { RunSimulate(); });
  }

  void RunSimulate() {
    const VectorPair pair = simulate_.pair.Load();
    SweepOptions options;
    options.ks = simulate_.ks;
    options.scheme = ParseScheme(simulate_.scheme);
    if (options.scheme == Scheme::kVsrp) {
      throw Error(ErrorCode::kInvalidParameter,
                  "--scheme takes fixed or variable; use vsrp_* estimators");
    }
    options.dist = ProjectionDistribution::FromName(simulate_.dist, simulate_.s);
    options.repetitions = simulate_.m;
    options.trials = simulate_.trials;
    options.seed = simulate_.seed;
    options.threads = simulate_.threads;
    options.estimators.clear();
    for (const std::string& name : simulate_.estimators) {
      options.estimators.push_back(ParseEstimator(name));
    }
    const std::vector<SweepRow> rows = MseSweep(pair.u, pair.v, options);
    WithOutput(simulate_.output, out_, [&](std::ostream& os) {
      os << "k,s,scheme,estimator,repetitions,trials,empirical_mse,"
            "empirical_bias,theoretical_var\n";
      for (const SweepRow& r : rows) {
        os << JoinCsv({Str(r.k), FormatDouble(r.s),
                       std::string(SchemeName(r.scheme)),
                       std::string(EstimatorName(r.estimator)),
                       Str(r.repetitions), Str(r.trials),
                       FormatDouble(r.empirical_mse),
                       FormatDouble(r.empirical_bias),
                       FormatDouble(r.theoretical_var)});
      }
    });
  }

  void AddRetrieval() {
    CLI::App* sub = app_.add_subcommand(
        "retrieval", "Precision-recall of sketched retrieval against exact cosine");
    sub->add_option("--base", retrieval_.base, "Base matrix file");
    sub->add_option("--queries", retrieval_.queries, "Query matrix file");
    retrieval_.data.Add(sub);
    sub->add_option("--base-count", retrieval_.base_count,
                    "Synthetic data: base vectors")
        ->capture_default_str();
    sub->add_option("--query-count", retrieval_.query_count,
                    "Synthetic data: queries")
        ->capture_default_str();
    retrieval_.flags.Add(sub);
    sub->add_option("--estimator", retrieval_.method,
                    "Ranking score: an estimator name or exact")
        ->capture_default_str();
    sub->add_option("--top-n", retrieval_.top_n, "Gold list length")
        ->capture_default_str();
    sub->add_flag("--aupr", retrieval_.aupr, "Print only the area under the curve");
    sub->add_option("--output", retrieval_.output, "CSV path (default stdout)");
    handlers_.emplace_back(sub, [this] { RunRetrieval(); });
  }

  void RunRetrieval() {
    Matrix base;
    Matrix queries;
    if (retrieval_.base.empty() != retrieval_.queries.empty()) {
      throw Error(ErrorCode::kInvalidParameter, "give both --base and --queries");
    }
    if (!retrieval_.base.empty()) {
      base = ReadMatrix(retrieval_.base);
      queries = ReadMatrix(retrieval_.queries);
    } else {
      auto [b, q] =
          retrieval_.data.Generate(retrieval_.base_count, retrieval_.query_count);
      base = std::move(b.points);
      queries = std::move(q.points);
    }
    const std::vector<PRPoint> curve =
        RetrievalEval(base, queries, retrieval_.flags.Build(base.cols),
                      ParseMethod(retrieval_.method), retrieval_.top_n);
    WithOutput(retrieval_.output, out_, [&](std::ostream& os) {
      if (retrieval_.aupr) {
        os << "aupr\n" << FormatDouble(AreaUnderPr(curve)) << '\n';
        return;
      }
      os << "depth,recall,precision\n";
      for (std::size_t n = 0; n < curve.size(); ++n) {
        os << JoinCsv({Str(n + 1), FormatDouble(curve[n].recall),
                       FormatDouble(curve[n].precision)});
      }
    });
  }

  void AddKnn() {
    CLI::App* sub = app_.add_subcommand(
        "knn", "K-nearest-neighbor accuracy with sketched cosine scores");
    sub->add_option("--train", knn_.train, "Training matrix file");
    sub->add_option("--train-labels", knn_.train_labels, "Training labels file");
    sub->add_option("--test", knn_.test, "Test matrix file");
    sub->add_option("--test-labels", knn_.test_labels, "Test labels file");
    knn_.data.Add(sub);
    sub->add_option("--train-count", knn_.train_count, "Synthetic data: train size")
        ->capture_default_str();
    sub->add_option("--test-count", knn_.test_count, "Synthetic data: test size")
        ->capture_default_str();
    knn_.flags.Add(sub);
    sub->add_option("--estimator", knn_.method,
                    "Ranking score: an estimator name or exact")
        ->capture_default_str();
    sub->add_option("--neighbors", knn_.neighbors, "K")->capture_default_str();
    handlers_.emplace_back(sub, [this] { RunKnn(); });
  }

  void RunKnn() {
    LabeledData train;
    LabeledData test;
    const bool from_files = !knn_.train.empty() || !knn_.test.empty();
    if (from_files) {
      if (knn_.train.empty() || knn_.test.empty() || knn_.train_labels.empty() ||
          knn_.test_labels.empty()) {
        throw Error(ErrorCode::kInvalidParameter,
                    "give --train, --train-labels, --test and --test-labels");
      }
      train.points = ReadMatrix(knn_.train);
      train.labels = ReadLabels(knn_.train_labels);
      test.points = ReadMatrix(knn_.test);
      test.labels = ReadLabels(knn_.test_labels);
    } else {
      std::tie(train, test) = knn_.data.Generate(knn_.train_count, knn_.test_count);
    }
    const double accuracy =
        KnnEval(train.points, train.labels, test.points, test.labels,
                knn_.neighbors, knn_.flags.Build(train.points.cols),
                ParseMethod(knn_.method));
    out_ << "accuracy\n" << FormatDouble(accuracy) << '\n';
  }

  void AddDp() {
    CLI::App* sub =
        app_.add_subcommand("dp", "Differentially private sketch of one row");
    sub->add_option("--input", dp_.input, "CSV or binary matrix")->required();
    sub->add_option("--row", dp_.row, "Row to sketch")->capture_default_str();
    sub->add_option("--output", dp_.output, "Sketch file")->required();
    sub->add_option("--mechanism", dp_.mechanism, "gaussian | rr | rr-smooth")
        ->capture_default_str();
    sub->add_option("--epsilon", dp_.spec.epsilon, "Privacy budget")
        ->capture_default_str();
    sub->add_option("--delta", dp_.spec.delta, "Gaussian mechanism delta")
        ->capture_default_str();
    sub->add_option("--beta", dp_.spec.beta, "Adjacency bound per coordinate")
        ->capture_default_str();
    sub->add_option("--noise-seed", dp_.noise_seed, "Seed of the privacy noise")
        ->capture_default_str();
    dp_.flags.Add(sub);
    handlers_.emplace_back(sub, [this] { RunDp(); });
  }

  void RunDp() {
    const std::vector<double> u = LoadRow(dp_.input, dp_.row);
    const SketchConfig config = dp_.flags.Build(u.size());
    if (!(dp_.spec.epsilon > 0.0)) {
      throw Error(ErrorCode::kInvalidParameter, "--epsilon must be > 0");
    }
    if (dp_.mechanism == "gaussian") {
      const NoisySketch noisy = DpOporp(u, config, dp_.spec, dp_.noise_seed);
      WriteNoisySketch(dp_.output, noisy);
      out_ << "sigma\n" << FormatDouble(noisy.sigma) << '\n';
    } else if (dp_.mechanism == "rr" || dp_.mechanism == "rr-smooth") {
      const SignSketch signs =
          dp_.mechanism == "rr"
              ? DpSignOporpRr(u, config, dp_.spec.epsilon, dp_.noise_seed)
              : DpSignOporpRrSmooth(u, config, dp_.spec.epsilon, dp_.spec.beta,
                                    dp_.noise_seed);
      WriteSignSketch(dp_.output, signs);
    } else {
      throw Error(ErrorCode::kInvalidParameter,
                  "unknown mechanism '" + dp_.mechanism + "'");
    }
  }

  std::ostream& out_;
  CLI::App app_;
  std::vector<std::pair<CLI::App*, std::function<void()>>> handlers_;

  struct {
    std::string input;
    std::size_t row = 0;
    std::string output;
    SketchFlags flags;
  } sketch_;
  struct {
    std::string x;
    std::string y;
    std::string estimator = "cosine";
  } estimate_;
  struct {
    PairFlags pair;
    std::vector<std::size_t> ks;
    std::vector<double> ss = {1.0};
    std::vector<std::string> schemes = {"fixed"};
    std::size_t m = 1;
    std::vector<std::string> estimators = {"inner", "distance", "cosine",
                                           "inner_normalized", "vsrp_inner",
                                           "vsrp_cosine"};
    std::string output;
  } variance_;
  struct {
    PairFlags pair;
    std::vector<std::size_t> ks;
    std::string scheme = "fixed";
    std::string dist = "rademacher";
    double s = 1.0;
    std::size_t m = 1;
    std::vector<std::string> estimators = {"inner", "cosine"};
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string output;
  } simulate_;
  struct {
    std::string base;
    std::string queries;
    DataFlags data;
    std::size_t base_count = 2000;
    std::size_t query_count = 200;
    SketchFlags flags;
    std::string method = "cosine";
    std::size_t top_n = 10;
    bool aupr = false;
    std::string output;
  } retrieval_;
  struct {
    std::string train;
    std::string train_labels;
    std::string test;
    std::string test_labels;
    DataFlags data;
    std::size_t train_count = 600;
    std::size_t test_count = 200;
    SketchFlags flags;
    std::string method = "cosine";
    std::size_t neighbors = 1;
  } knn_;
  struct {
    std::string input;
    std::size_t row = 0;
    std::string output;
    std::string mechanism = "gaussian";
    PrivacySpec spec;
    std::uint64_t noise_seed = 0;
    SketchFlags flags;
  } dp_;
};

void PrintError(std::ostream& err, std::string_view code, int exit_code,
                std::string message) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  err << "error: code=" << code << " exit=" << exit_code << " message=" << message
      << '\n';
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Cli cli(out);
  try {
    // CLI11 consumes a reversed argument vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.app().parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return cli.app().exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.app().exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    PrintError(err, "usage", kUsageExitCode, e.what());
    return kUsageExitCode;
  }
  try {
    cli.Dispatch();
  } catch (const Error& e) {
    const int code = ExitCodeFor(e.code());
    PrintError(err, ErrorCodeName(e.code()), code, e.what());
    return code;
  } catch (const std::exception& e) {
    PrintError(err, "internal", 1, e.what());
    return 1;
  }
  return 0;
}

int RunCli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return RunCli(args, std::cout, std::cerr);
}

}  // namespace oporp
