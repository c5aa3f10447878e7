// Copyright 2026 The fringesteer Authors
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

#ifndef FRINGE_CLI_HPP_
#define FRINGE_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace fringe::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // gradcheck above tolerance
  kConfigError = 2,
  kIoError = 3,
  kNotConverged = 4,
  kDiverged = 5,
};

/// Runs `fringesteer <subcommand> [flags]`. `args[0]` is the program name.
/// Subcommands: simulate | steer | gradcheck | layers | sweep.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fringe::cli

#endif  // FRINGE_CLI_HPP_
