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

// Shared randomness of a sketch: the coordinate permutation and the random
// projection entries r_i with E r = 0, E r^2 = 1, E r^3 = 0, E r^4 = s.

#ifndef OPORP_PROJECTION_H_
#define OPORP_PROJECTION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oporp {

enum class DistributionKind : std::uint8_t {
  kRademacher = 0,
  kGaussian = 1,
  kScaledUniform = 2,
  kSparse = 3,
};

// Law of the projection entries. Construct through the named factories; the
// sparsity field doubles as the fourth moment s for every kind.
class ProjectionDistribution {
 public:
  static ProjectionDistribution Rademacher();
  static ProjectionDistribution Gaussian();
  // sqrt(3) * Uniform[-1, 1].
  static ProjectionDistribution ScaledUniform();
  // sqrt(s) * {-1, 0, +1} with probabilities {1/(2s), 1 - 1/s, 1/(2s)}.
  // Throws kInvalidParameter unless s >= 1.
  static ProjectionDistribution Sparse(double s);

  // Inverse of Name(); `s` is used only for "sparse".
  static ProjectionDistribution FromName(std::string_view name, double s = 1.0);

  DistributionKind kind() const { return kind_; }
  double sparsity() const { return sparsity_; }
  std::string Name() const;

  friend bool operator==(const ProjectionDistribution&,
                         const ProjectionDistribution&) = default;

 private:
  ProjectionDistribution(DistributionKind kind, double sparsity)
      : kind_(kind), sparsity_(sparsity) {}

  DistributionKind kind_;
  double sparsity_;
};

// E(r^4): 1, 3, 9/5 and s for the four kinds.
double FourthMoment(const ProjectionDistribution& dist);

// mapping[i] is the position coordinate i is moved to. A bijection on [0, D).
struct Permutation {
  std::vector<std::uint32_t> mapping;
};

// Fisher-Yates shuffle driven by SplitMix64(seed). Throws kInvalidDimension
// for D = 0 or D >= 2^32.
Permutation GeneratePermutation(std::size_t dim, std::uint64_t seed);

// Entry `index` of the projection vector keyed by `seed`. Each entry is a pure
// function of (dist, seed, index), so a sketch of a sparse vector only touches
// the entries it needs.
double ProjectionEntry(const ProjectionDistribution& dist, std::uint64_t seed,
                       std::uint64_t index);

struct ProjectionVector {
  std::vector<double> entries;
};

// All D entries; entries[i] == ProjectionEntry(dist, seed, i).
ProjectionVector GenerateProjectionVector(std::size_t dim,
                                          const ProjectionDistribution& dist,
                                          std::uint64_t seed);

}  // namespace oporp

#endif  // OPORP_PROJECTION_H_
