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

#include "oporp/sketch.h"

#include <cmath>
#include <limits>

#include "oporp/error.h"
#include "oporp/random.h"

namespace oporp {
namespace {

constexpr std::uint64_t kPermutationStream = 0;
constexpr std::uint64_t kProjectionStream = 1;
constexpr std::uint64_t kBinStream = 2;

double L2Norm(std::span<const double> u) {
  double sum = 0.0;
  for (double x : u) sum += x * x;
  return std::sqrt(sum);
}

void CheckInput(std::span<const double> u, const SketchConfig& config) {
  if (u.size() != config.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector has " + std::to_string(u.size()) +
                    " coordinates, sketch config expects " +
                    std::to_string(config.dim));
  }
}

std::vector<std::size_t> NonzeroIndices(std::span<const double> u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0.0) out.push_back(i);
  }
  return out;
}

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kFixedLength:
      return "fixed";
    case Scheme::kVariableLength:
      return "variable";
    case Scheme::kVsrp:
      return "vsrp";
  }
  return "unknown";
}

Scheme ParseScheme(std::string_view name) {
  if (name == "fixed") return Scheme::kFixedLength;
  if (name == "variable") return Scheme::kVariableLength;
  if (name == "vsrp") return Scheme::kVsrp;
  throw Error(ErrorCode::kInvalidParameter,
              "unknown scheme '" + std::string(name) + "'");
}

void SketchConfig::Validate() const {
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidDimension, "sketch dimension D must be >= 1");
  }
  if (k == 0) {
    throw Error(ErrorCode::kInvalidParameter, "number of bins k must be >= 1");
  }
  if (repetitions == 0) {
    throw Error(ErrorCode::kInvalidParameter, "repetitions m must be >= 1");
  }
  if (scheme == Scheme::kFixedLength && k > dim) {
    throw Error(ErrorCode::kInvalidParameter,
                "fixed-length binning needs k <= D (k=" + std::to_string(k) +
                    ", D=" + std::to_string(dim) + ")");
  }
  if (scheme == Scheme::kVsrp && repetitions != 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "VSRP sketches have a single block; use k for the sample size");
  }
  if (PaddedDim() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidDimension, "padded dimension exceeds 2^32-1");
  }
}

std::size_t SketchConfig::PaddedDim() const {
  if (scheme != Scheme::kFixedLength || k == 0) return dim;
  return (dim + k - 1) / k * k;
}

BinAssignment ComputeBinAssignment(const SketchConfig& config,
                                   std::size_t repetition) {
  config.Validate();
  if (config.scheme == Scheme::kVsrp) {
    throw Error(ErrorCode::kUnsupported, "VSRP sketches have no bin assignment");
  }
  if (repetition >= config.repetitions) {
    throw Error(ErrorCode::kInvalidParameter,
                "repetition index " + std::to_string(repetition) +
                    " out of range");
  }
  const std::size_t padded = config.PaddedDim();
  const std::uint64_t rep_seed = DeriveSeed(config.seed, repetition);
  BinAssignment out;
  out.bin_of.resize(padded);
  if (config.k == 1) return out;

  if (config.scheme == Scheme::kFixedLength) {
    const Permutation perm =
        GeneratePermutation(padded, DeriveSeed(rep_seed, kPermutationStream));
    const std::size_t width = padded / config.k;
    for (std::size_t i = 0; i < padded; ++i) {
      out.bin_of[i] = static_cast<std::uint32_t>(perm.mapping[i] / width);
    }
  } else {
    SplitMix64 gen(DeriveSeed(rep_seed, kBinStream));
    for (std::size_t i = 0; i < padded; ++i) {
      out.bin_of[i] = static_cast<std::uint32_t>(UniformBelow(gen, config.k));
    }
  }
  return out;
}

OporpSketcher::OporpSketcher(const SketchConfig& config) : config_(config) {
  config_.Validate();
  if (config_.scheme == Scheme::kVsrp) {
    throw Error(ErrorCode::kInvalidParameter,
                "OporpSketcher needs a fixed or variable binning scheme");
  }
  if (config_.k > 1) {
    bins_.reserve(config_.repetitions);
    for (std::size_t rep = 0; rep < config_.repetitions; ++rep) {
      bins_.push_back(ComputeBinAssignment(config_, rep));
    }
  }
}

Sketch OporpSketcher::Apply(std::span<const double> u) const {
  CheckInput(u, config_);
  Sketch sketch;
  sketch.config = config_;
  sketch.stored_norm = L2Norm(u);
  sketch.values.assign(config_.k * config_.repetitions, 0.0);
  // Padding coordinates are zero and never contribute; neither do zeros of u.
  const std::vector<std::size_t> support = NonzeroIndices(u);
  for (std::size_t rep = 0; rep < config_.repetitions; ++rep) {
    const std::uint64_t projection_seed =
        DeriveSeed(DeriveSeed(config_.seed, rep), kProjectionStream);
    double* block = sketch.values.data() + rep * config_.k;
    if (config_.k == 1) {
      double sum = 0.0;
      for (std::size_t i : support) {
        sum += u[i] * ProjectionEntry(config_.dist, projection_seed, i);
      }
      block[0] = sum;
      continue;
    }
    const std::vector<std::uint32_t>& bin_of = bins_[rep].bin_of;
    for (std::size_t i : support) {
      block[bin_of[i]] += u[i] * ProjectionEntry(config_.dist, projection_seed, i);
    }
  }
  return sketch;
}

Sketch OporpSketch(std::span<const double> u, const SketchConfig& config) {
  return OporpSketcher(config).Apply(u);
}

Sketch VsrpSketch(std::span<const double> u, const SketchConfig& config) {
  config.Validate();
  if (config.scheme != Scheme::kVsrp) {
    throw Error(ErrorCode::kInvalidParameter,
                "VsrpSketch needs a config with scheme vsrp");
  }
  CheckInput(u, config);
  Sketch sketch;
  sketch.config = config;
  sketch.stored_norm = L2Norm(u);
  sketch.values.assign(config.k, 0.0);
  const std::vector<std::size_t> support = NonzeroIndices(u);
  for (std::size_t j = 0; j < config.k; ++j) {
    const std::uint64_t column_seed = DeriveSeed(config.seed, j);
    double sum = 0.0;
    for (std::size_t i : support) {
      sum += u[i] * ProjectionEntry(config.dist, column_seed, i);
    }
    sketch.values[j] = sum;
  }
  return sketch;
}

Sketch VsrpSketch(std::span<const double> u, std::size_t dim, std::size_t k,
                  double s, std::uint64_t seed) {
  SketchConfig config;
  config.dim = dim;
  config.k = k;
  config.scheme = Scheme::kVsrp;
  config.dist = ProjectionDistribution::Sparse(s);
  config.repetitions = 1;
  config.seed = seed;
  return VsrpSketch(u, config);
}

Sketch MakeSketch(std::span<const double> u, const SketchConfig& config) {
  if (config.scheme == Scheme::kVsrp) return VsrpSketch(u, config);
  return OporpSketch(u, config);
}

Sketch NormalizeSketch(const Sketch& sketch) {
  Sketch out = sketch;
  for (std::size_t rep = 0; rep < sketch.num_blocks(); ++rep) {
    const double norm = L2Norm(sketch.Block(rep));
    if (norm == 0.0) {
      throw Error(ErrorCode::kZeroNorm,
                  "sketch block " + std::to_string(rep) + " has zero norm");
    }
    for (std::size_t j = 0; j < sketch.config.k; ++j) {
      out.values[rep * sketch.config.k + j] /= norm;
    }
  }
  return out;
}

}  // namespace oporp
