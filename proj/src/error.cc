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

#include "oporp/error.h"

namespace oporp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension:
      return "invalid_dimension";
    case ErrorCode::kInvalidParameter:
      return "invalid_parameter";
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kIncompatibleSketch:
      return "incompatible_sketch";
    case ErrorCode::kZeroNorm:
      return "zero_norm";
    case ErrorCode::kEstimationFailure:
      return "estimation_failure";
    case ErrorCode::kPadRequired:
      return "pad_required";
    case ErrorCode::kDegeneratePair:
      return "degenerate_pair";
    case ErrorCode::kNumeric:
      return "numeric";
    case ErrorCode::kDomain:
      return "domain";
    case ErrorCode::kUnsupported:
      return "unsupported";
    case ErrorCode::kConvergence:
      return "convergence";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kParse:
      return "parse";
  }
  return "unknown";
}

int ExitCodeFor(ErrorCode code) { return 10 + static_cast<int>(code); }

}  // namespace oporp
