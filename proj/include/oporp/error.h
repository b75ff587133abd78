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

#ifndef OPORP_ERROR_H_
#define OPORP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace oporp {

// Every failure raised by the library carries one of these codes. The CLI maps
// each code to its own process exit status (see ExitCodeFor).
enum class ErrorCode {
  kInvalidDimension,
  kInvalidParameter,
  kDimensionMismatch,
  kIncompatibleSketch,
  kZeroNorm,
  kEstimationFailure,
  kPadRequired,
  kDegeneratePair,
  kNumeric,
  kDomain,
  kUnsupported,
  kConvergence,
  kIo,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Process exit status used by the CLI for `code`. Distinct per code, all >= 10.
int ExitCodeFor(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oporp

#endif  // OPORP_ERROR_H_
