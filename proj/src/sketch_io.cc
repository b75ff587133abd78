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

#include "oporp/sketch_io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "byte_io.h"
#include "oporp/error.h"

namespace oporp {
namespace {

constexpr char kSketchMagic[4] = {'O', 'P', 'S', 'K'};
constexpr std::uint32_t kSketchVersion = 1;
// Guards allocations when reading a corrupt header.
constexpr std::uint64_t kMaxValues = std::uint64_t{1} << 34;

void EncodeHeader(std::ostream& out, const SketchConfig& config,
                  SketchValueType type, const std::optional<double>& norm,
                  double noise_sigma) {
  out.write(kSketchMagic, 4);
  byte_io::PutU32(out, kSketchVersion);
  byte_io::PutU64(out, config.dim);
  byte_io::PutU64(out, config.k);
  byte_io::PutU8(out, static_cast<std::uint8_t>(config.scheme));
  byte_io::PutU8(out, static_cast<std::uint8_t>(config.dist.kind()));
  byte_io::PutU8(out, static_cast<std::uint8_t>(type));
  byte_io::PutU8(out, norm.has_value() ? 1 : 0);
  byte_io::PutU32(out, 0);
  byte_io::PutF64(out, config.dist.sparsity());
  byte_io::PutU64(out, config.repetitions);
  byte_io::PutU64(out, config.seed);
  byte_io::PutF64(out, norm.value_or(0.0));
  byte_io::PutF64(out, noise_sigma);
}

ProjectionDistribution DecodeDistribution(std::uint8_t kind, double s) {
  switch (static_cast<DistributionKind>(kind)) {
    case DistributionKind::kRademacher:
      return ProjectionDistribution::Rademacher();
    case DistributionKind::kGaussian:
      return ProjectionDistribution::Gaussian();
    case DistributionKind::kScaledUniform:
      return ProjectionDistribution::ScaledUniform();
    case DistributionKind::kSparse:
      return ProjectionDistribution::Sparse(s);
  }
  throw Error(ErrorCode::kParse, "unknown distribution code in sketch header");
}

}  // namespace

void EncodeSketch(std::ostream& out, const Sketch& sketch, double noise_sigma) {
  EncodeHeader(out, sketch.config, SketchValueType::kFloat64,
               sketch.stored_norm, noise_sigma);
  for (double x : sketch.values) byte_io::PutF64(out, x);
}

void EncodeSignSketch(std::ostream& out, const SignSketch& sketch) {
  EncodeHeader(out, sketch.config, SketchValueType::kSign, std::nullopt, 0.0);
  for (std::int8_t b : sketch.bits) {
    byte_io::PutU8(out, static_cast<std::uint8_t>(b));
  }
}

SketchFile DecodeSketchFile(std::istream& in) {
  char magic[4];
  byte_io::ReadExact(in, magic, 4);
  if (!std::equal(magic, magic + 4, kSketchMagic)) {
    throw Error(ErrorCode::kParse, "not a sketch file (bad magic)");
  }
  if (byte_io::GetU32(in) != kSketchVersion) {
    throw Error(ErrorCode::kParse, "unsupported sketch file version");
  }
  SketchFile file;
  SketchConfig& config = file.sketch.config;
  config.dim = byte_io::GetU64(in);
  config.k = byte_io::GetU64(in);
  const std::uint8_t scheme = byte_io::GetU8(in);
  const std::uint8_t dist_kind = byte_io::GetU8(in);
  const std::uint8_t value_type = byte_io::GetU8(in);
  const std::uint8_t has_norm = byte_io::GetU8(in);
  byte_io::GetU32(in);
  const double s = byte_io::GetF64(in);
  config.repetitions = byte_io::GetU64(in);
  config.seed = byte_io::GetU64(in);
  const double norm = byte_io::GetF64(in);
  file.noise_sigma = byte_io::GetF64(in);

  if (scheme > 2 || value_type > 1 || has_norm > 1) {
    throw Error(ErrorCode::kParse, "corrupt sketch header");
  }
  config.scheme = static_cast<Scheme>(scheme);
  config.dist = DecodeDistribution(dist_kind, s);
  file.value_type = static_cast<SketchValueType>(value_type);
  if (has_norm == 1) file.sketch.stored_norm = norm;
  try {
    config.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid sketch header: ") + e.what());
  }
  const std::uint64_t count = config.k * config.repetitions;
  if (count / config.repetitions != config.k || count > kMaxValues) {
    throw Error(ErrorCode::kParse, "sketch header declares too many values");
  }
  if (file.value_type == SketchValueType::kFloat64) {
    file.sketch.values.resize(count);
    for (double& x : file.sketch.values) x = byte_io::GetF64(in);
  } else {
    file.signs.resize(count);
    for (std::int8_t& b : file.signs) {
      b = static_cast<std::int8_t>(byte_io::GetU8(in));
      if (b != 1 && b != -1) throw Error(ErrorCode::kParse, "sign value not +-1");
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::kParse, "trailing bytes after sketch values");
  }
  return file;
}

void WriteSketch(const std::string& path, const Sketch& sketch,
                 double noise_sigma) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  EncodeSketch(out, sketch, noise_sigma);
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

void WriteNoisySketch(const std::string& path, const NoisySketch& sketch) {
  WriteSketch(path, sketch.sketch, sketch.sigma);
}

void WriteSignSketch(const std::string& path, const SignSketch& sketch) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  EncodeSignSketch(out, sketch);
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

SketchFile ReadSketchFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return DecodeSketchFile(in);
}

Sketch ReadSketch(const std::string& path) {
  SketchFile file = ReadSketchFile(path);
  if (file.value_type != SketchValueType::kFloat64) {
    throw Error(ErrorCode::kParse, path + " holds a sign sketch");
  }
  return std::move(file.sketch);
}

SignSketch ReadSignSketch(const std::string& path) {
  SketchFile file = ReadSketchFile(path);
  if (file.value_type != SketchValueType::kSign) {
    throw Error(ErrorCode::kParse, path + " holds float values, not signs");
  }
  SignSketch out;
  out.config = file.sketch.config;
  out.bits = std::move(file.signs);
  return out;
}

}  // namespace oporp
