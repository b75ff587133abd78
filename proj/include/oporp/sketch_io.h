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

// Sketch file format. All integers and floats are little-endian.
//
//   offset  type     field
//   0       char[4]  magic "OPSK"
//   4       u32      version (1)
//   8       u64      D, original dimension
//   16      u64      k, samples per repetition
//   24      u8       scheme: 0 fixed, 1 variable, 2 vsrp
//   25      u8       distribution: 0 rademacher, 1 gaussian, 2 uniform, 3 sparse
//   26      u8       value type: 0 float64, 1 int8 sign (+1 / -1)
//   27      u8       has_norm (0 / 1)
//   28      u32      reserved, 0
//   32      f64      s, fourth moment / sparsity
//   40      u64      m, repetitions
//   48      u64      seed
//   56      f64      stored l2 norm of the original vector (0 if has_norm = 0)
//   64      f64      noise sigma of a Gaussian-mechanism sketch (0 otherwise)
//   72      values   k * m entries, repetition-major
//
// Float values are written bit-for-bit, so a file round trip reproduces every
// estimate exactly.

#ifndef OPORP_SKETCH_IO_H_
#define OPORP_SKETCH_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "oporp/privacy.h"
#include "oporp/sketch.h"

namespace oporp {

enum class SketchValueType : std::uint8_t { kFloat64 = 0, kSign = 1 };

struct SketchFile {
  SketchValueType value_type = SketchValueType::kFloat64;
  Sketch sketch;  // values empty for sign files
  double noise_sigma = 0.0;
  std::vector<std::int8_t> signs;  // sign files only
};

void EncodeSketch(std::ostream& out, const Sketch& sketch,
                  double noise_sigma = 0.0);
void EncodeSignSketch(std::ostream& out, const SignSketch& sketch);
SketchFile DecodeSketchFile(std::istream& in);

void WriteSketch(const std::string& path, const Sketch& sketch,
                 double noise_sigma = 0.0);
void WriteNoisySketch(const std::string& path, const NoisySketch& sketch);
void WriteSignSketch(const std::string& path, const SignSketch& sketch);

SketchFile ReadSketchFile(const std::string& path);
// Throws kParse if the file holds signs rather than float values.
Sketch ReadSketch(const std::string& path);
// Throws kParse if the file holds float values.
SignSketch ReadSignSketch(const std::string& path);

}  // namespace oporp

#endif  // OPORP_SKETCH_IO_H_
