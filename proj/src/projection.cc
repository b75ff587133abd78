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

#include "oporp/projection.h"

#include <cmath>
#include <limits>
#include <numeric>

#include "oporp/error.h"
#include "oporp/random.h"

namespace oporp {

ProjectionDistribution ProjectionDistribution::Rademacher() {
  return {DistributionKind::kRademacher, 1.0};
}

ProjectionDistribution ProjectionDistribution::Gaussian() {
  return {DistributionKind::kGaussian, 3.0};
}

ProjectionDistribution ProjectionDistribution::ScaledUniform() {
  return {DistributionKind::kScaledUniform, 9.0 / 5.0};
}

ProjectionDistribution ProjectionDistribution::Sparse(double s) {
  if (!(s >= 1.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidParameter,
                "sparse projection requires finite s >= 1, got " +
                    std::to_string(s));
  }
  return {DistributionKind::kSparse, s};
}

ProjectionDistribution ProjectionDistribution::FromName(std::string_view name,
                                                        double s) {
  if (name == "rademacher") return Rademacher();
  if (name == "gaussian") return Gaussian();
  if (name == "uniform") return ScaledUniform();
  if (name == "sparse") return Sparse(s);
  throw Error(ErrorCode::kInvalidParameter,
              "unknown projection distribution '" + std::string(name) + "'");
}

std::string ProjectionDistribution::Name() const {
  switch (kind_) {
    case DistributionKind::kRademacher:
      return "rademacher";
    case DistributionKind::kGaussian:
      return "gaussian";
    case DistributionKind::kScaledUniform:
      return "uniform";
    case DistributionKind::kSparse:
      return "sparse";
  }
  return "unknown";
}

double FourthMoment(const ProjectionDistribution& dist) {
  return dist.sparsity();
}

Permutation GeneratePermutation(std::size_t dim, std::uint64_t seed) {
  if (dim == 0 || dim > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidDimension,
                "permutation dimension must be in [1, 2^32), got " +
                    std::to_string(dim));
  }
  Permutation perm;
  perm.mapping.resize(dim);
  std::iota(perm.mapping.begin(), perm.mapping.end(), std::uint32_t{0});
  SplitMix64 gen(seed);
  for (std::size_t i = dim - 1; i > 0; --i) {
    const std::uint64_t j = UniformBelow(gen, i + 1);
    std::swap(perm.mapping[i], perm.mapping[j]);
  }
  return perm;
}

double ProjectionEntry(const ProjectionDistribution& dist, std::uint64_t seed,
                       std::uint64_t index) {
  SplitMix64 gen(DeriveSeed(seed, index));
  switch (dist.kind()) {
    case DistributionKind::kRademacher:
      return (gen() >> 63) != 0 ? 1.0 : -1.0;
    case DistributionKind::kGaussian:
      return StandardNormal(gen);
    case DistributionKind::kScaledUniform:
      return std::sqrt(3.0) * (2.0 * UniformUnit(gen) - 1.0);
    case DistributionKind::kSparse: {
      const double s = dist.sparsity();
      const double u = UniformUnit(gen);
      const double half = 0.5 / s;
      if (u < half) return -std::sqrt(s);
      if (u < 2.0 * half) return std::sqrt(s);
      return 0.0;
    }
  }
  return 0.0;
}

ProjectionVector GenerateProjectionVector(std::size_t dim,
                                          const ProjectionDistribution& dist,
                                          std::uint64_t seed) {
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidDimension,
                "projection vector dimension must be positive");
  }
  ProjectionVector r;
  r.entries.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    r.entries[i] = ProjectionEntry(dist, seed, i);
  }
  return r;
}

}  // namespace oporp
