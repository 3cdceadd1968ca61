// Copyright 2026 The Dirichlet Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: guarantee, solve, convert, hist-bench, psrl and
// kl-utility subcommands.

#ifndef DIRICHLET_PRIVACY_TOOLS_CLI_H_
#define DIRICHLET_PRIVACY_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dirichlet_privacy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAssertionFailed = 3;

// Directory used for outputs when --output is absent. Unset means stdout.
inline constexpr const char* kOutputDirEnv = "DIRICHLET_PRIVACY_OUTPUT_DIR";

// Runs one command. `args` excludes the program name. Results go to `out`
// (or a file), diagnostics to `err`. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace dirichlet_privacy::cli

#endif  // DIRICHLET_PRIVACY_TOOLS_CLI_H_
