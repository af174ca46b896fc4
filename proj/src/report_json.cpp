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

#include "dicke/report_json.hpp"

#include <string>

namespace dicke {

using nlohmann::json;

void to_json(json &j, const InvariantReport &r) {
    json d = json::object();
    for (const auto &[l, v] : r.d_values) d[std::to_string(l)] = json::array({v.real(), v.imag()});
    j = json{{"n", r.n},
             {"tau", r.tau},
             {"tau_parity", to_string(r.tau_parity)},
             {"d", std::move(d)},
             {"zero_flags", r.zero_flags},
             {"zero_tolerance", r.zero_tolerance},
             {"scale", r.scale},
             {"exact_mode", r.exact_mode}};
    if (r.exact_mode) {
        json exact_d = json::object();
        for (const auto &[l, v] : r.d_exact) exact_d[std::to_string(l)] = v.to_string();
        j["exact"] = {{"tau", r.tau_exact ? r.tau_exact->to_string() : std::string()}, {"d", std::move(exact_d)}};
    }
}

void to_json(json &j, const CrossTable &t) {
    json entries = json::array();
    for (const auto &e : t.entries) {
        entries.push_back({{"k", e.k},
                           {"l", e.l},
                           {"value", e.value.to_double()},
                           {"exact", e.value.to_string()},
                           {"zero", e.value.is_zero()}});
    }
    json deviations = json::array();
    for (const auto &[k, l] : t.deviations) deviations.push_back({{"k", k}, {"l", l}});
    j = json{{"n", t.n},
             {"entries", std::move(entries)},
             {"pattern", "D^(k)(|l,n>) = 0 for k != l, nonzero for k == l"},
             {"pattern_status", "unknown"},
             {"pattern_observed", t.deviations.empty()},
             {"deviations", std::move(deviations)}};
}

void to_json(json &j, const Verdict &v) {
    json comparisons = json::array();
    for (const auto &c : v.comparisons) {
        json rules = json::array();
        for (Rule r : c.rules) rules.push_back(to_string(r));
        comparisons.push_back({{"reference", to_string(c.reference)},
                               {"status", to_string(c.status)},
                               {"rules", std::move(rules)},
                               {"evidence", c.evidence}});
    }
    json excluded = json::array();
    for (ReferenceClass c : v.classes_excluded()) excluded.push_back(to_string(c));
    json dz = json::object();
    for (const auto &[l, z] : v.d_zeroness) dz[std::to_string(l)] = to_string(z);
    j = json{{"subject", v.subject},
             {"n", v.n},
             {"tau", v.tau},
             {"tau_zeroness", to_string(v.tau_zeroness)},
             {"d_zeroness", std::move(dz)},
             {"classes_excluded", std::move(excluded)},
             {"comparisons", std::move(comparisons)},
             {"note", "distinct is proven by an invariant mismatch; unknown proves nothing"}};
}

void to_json(json &j, const OrbitReport &r) {
    j = json{{"state", r.subject},
             {"n", r.n},
             {"trials", r.trials},
             {"seed", r.seed},
             {"parity", to_string(r.parity)},
             {"max_residual", r.max_residual},
             {"max_relative_residual", r.max_relative_residual},
             {"mean_relative_residual", r.mean_relative_residual},
             {"tolerance", r.tolerance},
             {"passed", r.passed},
             {"matrices_drawn", r.matrices_drawn},
             {"matrices_accepted", r.matrices_accepted},
             {"acceptance_rate", r.acceptance_rate},
             {"verdict", r.verdict}};
}

void to_json(json &j, const MonogamyReport &r) {
    j = json{{"n", r.n},
             {"l", r.l},
             {"c12", r.c12},
             {"c12_numeric", r.c12_numeric ? json(*r.c12_numeric) : json(nullptr)},
             {"c1_rest_sq", r.c1_rest_sq},
             {"chi", r.chi},
             {"chi_closed_form", r.chi_closed_form},
             {"is_even_max", r.is_even_max},
             {"is_max", r.is_max},
             {"notes", r.notes}};
}

void to_json(json &j, const MonogamySweep &s) {
    json claims = json::array();
    for (const auto &c : s.claims) {
        claims.push_back({{"name", c.name}, {"n", c.n}, {"holds", c.holds}, {"detail", c.detail}});
    }
    j = json{{"n_min", s.n_min},
             {"n_max", s.n_max},
             {"rows", s.rows},
             {"claims", std::move(claims)},
             {"all_claims_hold", s.all_claims_hold()}};
}

}  // namespace dicke
