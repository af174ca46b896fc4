// Copyright 2026 The dicke-slocc Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicke::cli {

inline constexpr const char *kToolName = "dicke-slocc";
inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kValidation = 1, kNumerical = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// structured error messages to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dicke::cli
