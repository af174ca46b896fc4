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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dicke/state.hpp"

namespace testing_helpers {

/// Haar-like random pure state from normalized complex Gaussians.
inline dicke::StateVector random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<dicke::Complex> a(dicke::dimension(n));
    double norm = 0;
    for (auto &x : a) {
        x = dicke::Complex(g(rng), g(rng));
        norm += std::norm(x);
    }
    for (auto &x : a) x /= std::sqrt(norm);
    return dicke::StateVector(n, std::move(a));
}

inline bool exactly_equal(const dicke::StateVector &a, const dicke::StateVector &b) {
    return a.num_qubits() == b.num_qubits() &&
           std::equal(a.amplitudes().begin(), a.amplitudes().end(), b.amplitudes().begin());
}

inline double max_abs_diff(const dicke::StateVector &a, const std::vector<dicke::Complex> &b) {
    double m = 0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace testing_helpers
