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

#include "dicke/state_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

using nlohmann::json;

double finite_number(const json &v, const char *what) {
    if (!v.is_number()) throw ValidationError(std::string("state file: ") + what + " is not a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ValidationError(std::string("state file: ") + what + " is not finite");
    return x;
}

json complex_pair(const Complex &a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw ValidationError("store_state: non-finite amplitude");
    }
    return json::array({a.real(), a.imag()});
}

}  // namespace

StateVector load_state(std::istream &in, int max_qubits) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("state file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ValidationError("state file: missing integer field \"n\"");
    }
    const auto n = doc["n"].get<std::int64_t>();
    if (n < 2 || n > max_qubits) {
        throw ValidationError("state file: n=" + std::to_string(n) + " outside [2, " + std::to_string(max_qubits) +
                              "]");
    }
    const std::string format = doc.value("format", std::string("dense"));
    const BasisIndex dim = dimension(static_cast<int>(n));

    std::vector<Complex> amps;
    if (format == "dense") {
        const auto it = doc.find("amplitudes");
        if (it == doc.end() || !it->is_array()) throw ValidationError("state file: missing \"amplitudes\" array");
        if (it->size() != dim) {
            throw ValidationError("state file: expected " + std::to_string(dim) + " amplitudes, got " +
                                  std::to_string(it->size()));
        }
        amps.reserve(dim);
        for (const json &entry : *it) {
            if (!entry.is_array() || entry.size() != 2) {
                throw ValidationError("state file: amplitude entries must be [re, im] pairs");
            }
            amps.emplace_back(finite_number(entry[0], "re"), finite_number(entry[1], "im"));
        }
    } else if (format == "sparse") {
        const auto it = doc.find("entries");
        if (it == doc.end() || !it->is_array()) throw ValidationError("state file: missing \"entries\" array");
        amps.assign(dim, Complex{});
        std::vector<bool> seen(dim, false);
        for (const json &entry : *it) {
            if (!entry.is_object() || !entry.contains("i") || !entry["i"].is_number_integer()) {
                throw ValidationError("state file: sparse entries need an integer \"i\"");
            }
            const auto i = entry["i"].get<std::int64_t>();
            if (i < 0 || static_cast<BasisIndex>(i) >= dim) {
                throw ValidationError("state file: sparse index " + std::to_string(i) + " out of range");
            }
            if (seen[i]) throw ValidationError("state file: duplicate sparse index " + std::to_string(i));
            seen[i] = true;
            const double re = entry.contains("re") ? finite_number(entry["re"], "re") : 0.0;
            const double im = entry.contains("im") ? finite_number(entry["im"], "im") : 0.0;
            amps[i] = Complex(re, im);
        }
    } else {
        throw ValidationError("state file: unknown format \"" + format + "\"");
    }
    return StateVector(static_cast<int>(n), std::move(amps), max_qubits);
}

StateVector load_state(const std::filesystem::path &path, int max_qubits) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open state file " + path.string());
    return load_state(in, max_qubits);
}

void store_state(const StateVector &s, std::ostream &out, StateFormat format) {
    json doc;
    doc["n"] = s.num_qubits();
    if (format == StateFormat::dense) {
        doc["format"] = "dense";
        json amps = json::array();
        for (const Complex &a : s.amplitudes()) amps.push_back(complex_pair(a));
        doc["amplitudes"] = std::move(amps);
    } else {
        doc["format"] = "sparse";
        json entries = json::array();
        for (BasisIndex i = 0; i < s.dim(); ++i) {
            if (s[i] == Complex{}) continue;
            complex_pair(s[i]);
            entries.push_back({{"i", i}, {"re", s[i].real()}, {"im", s[i].imag()}});
        }
        doc["entries"] = std::move(entries);
    }
    out << doc.dump() << '\n';
}

void store_state(const StateVector &s, const std::filesystem::path &path, StateFormat format) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write state file " + path.string());
    store_state(s, out, format);
}

}  // namespace dicke
