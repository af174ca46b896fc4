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

#include <nlohmann/json.hpp>

#include "dicke/invariants.hpp"
#include "dicke/monogamy.hpp"
#include "dicke/slocc.hpp"

namespace dicke {

// JSON forms of the report types, usable as `nlohmann::json j = report;`.

void to_json(nlohmann::json &j, const InvariantReport &r);
void to_json(nlohmann::json &j, const CrossTable &t);
void to_json(nlohmann::json &j, const Verdict &v);
void to_json(nlohmann::json &j, const OrbitReport &r);
void to_json(nlohmann::json &j, const MonogamyReport &r);
void to_json(nlohmann::json &j, const MonogamySweep &s);

}  // namespace dicke
