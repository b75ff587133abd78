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

// OPORP and VSRP sketches.
//
// OPORP, per repetition: zero-pad to a multiple of k (fixed-length only),
// permute, multiply by a fresh projection vector r, then sum each bin:
//
//   x_j = sum_i u_i r_i I_ij
//
// Fixed-length binning puts permuted positions [j*D/k, (j+1)*D/k) into bin j.
// Variable-length binning hashes every coordinate uniformly into one of k bins
// (classic count-sketch). VSRP computes x_j = sum_i u_i r_ij with an
// independent projection column per sample.
//
// Seeding. Everything is a pure function of SketchConfig::seed:
//   repetition seed   R = DeriveSeed(seed, rep)
//   permutation       GeneratePermutation(D_padded, DeriveSeed(R, 0))
//   projection r_i    ProjectionEntry(dist, DeriveSeed(R, 1), i)
//   variable bins     SplitMix64(DeriveSeed(R, 2)), one UniformBelow(k) per i
//   VSRP column j     ProjectionEntry(dist, DeriveSeed(seed, j), i)
// Two vectors sketched with equal configs therefore share their randomness.

#ifndef OPORP_SKETCH_H_
#define OPORP_SKETCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oporp/projection.h"

namespace oporp {

enum class Scheme : std::uint8_t {
  kFixedLength = 0,
  kVariableLength = 1,
  kVsrp = 2,
};

std::string_view SchemeName(Scheme scheme);
// Accepts "fixed", "variable" and "vsrp".
Scheme ParseScheme(std::string_view name);

struct SketchConfig {
  std::size_t dim = 0;
  std::size_t k = 1;
  Scheme scheme = Scheme::kFixedLength;
  ProjectionDistribution dist = ProjectionDistribution::Rademacher();
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;

  // Throws kInvalidDimension / kInvalidParameter on a malformed config.
  void Validate() const;

  // Dimension after zero-padding: the next multiple of k for fixed-length
  // binning, `dim` otherwise.
  std::size_t PaddedDim() const;

  friend bool operator==(const SketchConfig&, const SketchConfig&) = default;
};

// bin_of[i] = j iff coordinate i lands in bin j. Covers the padded dimension.
struct BinAssignment {
  std::vector<std::uint32_t> bin_of;
};

// Values are stored repetition-major: values[rep * k + j].
struct Sketch {
  std::vector<double> values;
  SketchConfig config;
  std::optional<double> stored_norm;

  std::size_t block_size() const { return config.k; }
  std::size_t num_blocks() const {
    return config.k == 0 ? 0 : values.size() / config.k;
  }
  std::span<const double> Block(std::size_t rep) const {
    return std::span<const double>(values).subspan(rep * config.k, config.k);
  }
};

BinAssignment ComputeBinAssignment(const SketchConfig& config,
                                   std::size_t repetition);

// Realized randomness of one OPORP config; reuse it to sketch many vectors.
class OporpSketcher {
 public:
  explicit OporpSketcher(const SketchConfig& config);

  const SketchConfig& config() const { return config_; }

  // Throws kDimensionMismatch unless u.size() == config().dim.
  Sketch Apply(std::span<const double> u) const;

 private:
  SketchConfig config_;
  // One assignment per repetition; empty when k == 1.
  std::vector<BinAssignment> bins_;
};

Sketch OporpSketch(std::span<const double> u, const SketchConfig& config);

// Requires config.scheme == kVsrp.
Sketch VsrpSketch(std::span<const double> u, const SketchConfig& config);

// Very sparse random projection with entries Sparse(s).
Sketch VsrpSketch(std::span<const double> u, std::size_t dim, std::size_t k,
                  double s, std::uint64_t seed);

// Sketches with whichever scheme the config names.
Sketch MakeSketch(std::span<const double> u, const SketchConfig& config);

// Scales every repetition block to unit l2 norm. Throws kZeroNorm if a block
// is all zeros.
Sketch NormalizeSketch(const Sketch& sketch);

}  // namespace oporp

#endif  // OPORP_SKETCH_H_
