// Copyright 2026 The qpi Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpi {

/// Process exit codes of the `qpi` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitResource = 3,
};

/// Entry point of the `qpi` tool without the program name:
///
///   qpi pi        [--n LIST] [--kmax LIST] [--shots N] [--reps R] [--seed S]
///                 [--mode sampled|exact] [--out PATH] [--allow-big]
///   qpi selftest  [--n N]
///   qpi gatecount [--min-n N] [--max-n N]
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace qpi
