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

// Command-line front end. Subcommands: sketch, estimate, variance, simulate,
// retrieval, knn, dp. Every run is determined by its flags.
//
// Exit codes: 0 success, 2 usage error, 10 + ErrorCode for library errors,
// 1 for anything else. Failures print one line to stderr:
//   error: code=<name> exit=<n> message=<text>

#ifndef OPORP_CLI_H_
#define OPORP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace oporp {

inline constexpr int kUsageExitCode = 2;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

int RunCli(int argc, char** argv);

}  // namespace oporp

#endif  // OPORP_CLI_H_
