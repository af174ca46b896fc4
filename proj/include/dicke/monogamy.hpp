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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dicke/state.hpp"

namespace dicke {

inline constexpr double kChiRouteTolerance = 1e-10;

/// Eigenvalues of rho * rho~, rho~ = (Y (x) Y) rho* (Y (x) Y), in decreasing
/// order. Computed as squared singular values of sqrt(rho) sqrt(rho~), so
/// they are nonnegative by construction.
std::array<double, 4> spin_flip_eigenvalues(const DensityMatrix &rho);

/// Two-qubit concurrence max(0, s1 - s2 - s3 - s4), s_i = sqrt(lambda_i).
/// Throws ValidationError unless rho is a Hermitian, unit-trace 4x4 matrix
/// whose eigenvalues are >= -1e-10.
double wootters_concurrence(const DensityMatrix &rho);

/// Pairwise concurrence of |l,n> in closed form,
///   2 sqrt(l(n-l)) (sqrt(l(n-l)) - sqrt((l-1)(n-l-1))) / (n(n-1)).
double c12_closed_form(int n, int l);

/// Squared concurrence between qubit 1 and the rest, 4 det(rho_1) = 4 l(n-l)/n^2.
double c1_rest_squared(int n, int l);

struct ChiRoutes {
    /// C^2_1(rest) - (n-1) C12^2.
    double by_definition = 0.0;
    /// 8 l(n-l) sqrt((l-1)(n-l-1)) (sqrt(l(n-l)) - sqrt((l-1)(n-l-1))) / (n^2 (n-1)).
    double closed_form = 0.0;
};

ChiRoutes chi_routes(int n, int l);

/// Monogamy gap of |l,n>. Both routes are evaluated; a disagreement above
/// kChiRouteTolerance throws NumericalError.
double chi(int n, int l);

/// Row maxima: (n-2)/(n-1) for even n, and
/// (n+1)(n-1) sqrt(n-3) (sqrt(n+1) - sqrt(n-3)) / (2 n^2) for odd n >= 3.
double chi_row_maximum(int n);

struct MonogamyReport {
    int n = 0;
    int l = 0;
    double c12 = 0.0;
    /// Partial trace -> spin flip -> Wootters; absent when not computed.
    std::optional<double> c12_numeric;
    double c1_rest_sq = 0.0;
    double chi = 0.0;
    double chi_closed_form = 0.0;
    bool is_even_max = false;
    /// l attains the row maximum of chi (two cells for odd n).
    bool is_max = false;
    std::vector<std::string> notes;
};

MonogamyReport monogamy_report(int n, int l, bool numeric = true);

struct SweepClaim {
    std::string name;
    int n = 0;
    bool holds = false;
    std::string detail;
};

struct MonogamySweep {
    int n_min = 0;
    int n_max = 0;
    std::vector<MonogamyReport> rows;
    std::vector<SweepClaim> claims;

    bool all_claims_hold() const;
};

inline constexpr int kDefaultSweepCap = 64;
inline constexpr int kDefaultNumericCap = 16;

/// Every (n, l) with n_min <= n <= n_max and 1 <= l <= n-1, plus per-row
/// checks of the extremal and monotonicity statements. The partial-trace
/// column is filled only for n <= numeric_cap.
MonogamySweep monogamy_sweep(int n_min, int n_max, int numeric_cap = kDefaultNumericCap,
                             int sweep_cap = kDefaultSweepCap);

/// Header n,l,c12,c12_numeric,c1_rest_sq,chi,is_max; missing numeric values
/// are left empty.
std::string to_csv(const MonogamySweep &sweep);

}  // namespace dicke
