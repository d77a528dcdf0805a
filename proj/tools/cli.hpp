// Copyright 2026 The nctorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCTORUS_TOOLS_CLI_HPP
#define NCTORUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nctorus::cli {

enum ExitCode : int { kOk = 0, kResidualFailure = 1, kPreconditionError = 2 };

// Runs the command line (without the program name). Results go to out, or to
// the --output file; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nctorus::cli

#endif  // NCTORUS_TOOLS_CLI_HPP
