// Copyright 2026 The qseries Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSERIES_TOOLS_CLI_HPP
#define QSERIES_TOOLS_CLI_HPP

#include <ostream>

namespace qseries::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

// Environment variable holding the default order for expand and verify.
inline constexpr const char* kOrderEnv = "QSERIES_ORDER";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli

#endif  // QSERIES_TOOLS_CLI_HPP
