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

#include <filesystem>
#include <iosfwd>

#include "dicke/state.hpp"

namespace dicke {

enum class StateFormat { dense, sparse };

/// Reads either the dense or the sparse JSON state format:
///
///   {"n": 4, "format": "dense", "amplitudes": [[re, im], ...]}
///   {"n": 4, "format": "sparse", "entries": [{"i": 3, "re": 0.5, "im": 0.0}, ...]}
///
/// Throws ValidationError on malformed input, wrong length or non-finite
/// numbers.
StateVector load_state(std::istream &in, int max_qubits = kDefaultMaxQubits);
StateVector load_state(const std::filesystem::path &path, int max_qubits = kDefaultMaxQubits);

/// Writes `s` in the requested format. Doubles are emitted in shortest
/// round-trip form, so store followed by load is bit exact.
void store_state(const StateVector &s, std::ostream &out, StateFormat format = StateFormat::dense);
void store_state(const StateVector &s, const std::filesystem::path &path,
                 StateFormat format = StateFormat::dense);

}  // namespace dicke
