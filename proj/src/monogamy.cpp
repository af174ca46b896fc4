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

#include "dicke/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

void check_cell(int n, int l) {
    if (n < 2) throw ValidationError("monogamy: n must be >= 2");
    if (l < 1 || l > n - 1) {
        throw ValidationError("monogamy: l=" + std::to_string(l) + " outside [1, " + std::to_string(n - 1) + "]");
    }
}

// l(n-l) and (l-1)(n-l-1) as exact integers; both are symmetric under
// l -> n-l, which makes every closed form below exactly symmetric too.
struct CellProducts {
    double outer;
    double inner;
};

CellProducts products(int n, int l) {
    const long long a = static_cast<long long>(l) * (n - l);
    const long long b = static_cast<long long>(l - 1) * (n - l - 1);
    return {static_cast<double>(a), static_cast<double>(b)};
}

Eigen::Matrix4cd spin_flip_operator() {
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::array<double, 4> spin_flip_eigenvalues(const DensityMatrix &rho) {
    if (rho.num_qubits() != 2) throw ValidationError("concurrence: density matrix must be two-qubit (4x4)");
    const Eigen::Matrix4cd herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(herm);
    Eigen::Vector4d w = eig.eigenvalues();
    const double top = std::max(w.maxCoeff(), 0.0);
    for (int i = 0; i < 4; ++i) {
        // Eigenvalues at roundoff level are exact zeros of the true matrix.
        if (w(i) <= 1e-14 * top) w(i) = 0.0;
    }
    const Eigen::Matrix4cd sqrt_rho = eig.eigenvectors() * w.cwiseSqrt().asDiagonal() * eig.eigenvectors().adjoint();
    const Eigen::Matrix4cd y = spin_flip_operator();
    const Eigen::Matrix4cd sqrt_flipped = y * sqrt_rho.conjugate() * y;
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(sqrt_rho * sqrt_flipped).singularValues();
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) lambda[i] = sv(i) * sv(i);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return lambda;
}

double wootters_concurrence(const DensityMatrix &rho) {
    if (rho.num_qubits() != 2) throw ValidationError("concurrence: density matrix must be two-qubit (4x4)");
    if (!rho.is_hermitian(kNormTolerance)) throw ValidationError("concurrence: density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-10) throw ValidationError("concurrence: density matrix trace is not 1");
    if (rho.min_eigenvalue() < -1e-10) throw ValidationError("concurrence: density matrix is not PSD");
    const auto lambda = spin_flip_eigenvalues(rho);
    double s[4];
    for (int i = 0; i < 4; ++i) s[i] = std::sqrt(lambda[i]);
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double c12_closed_form(int n, int l) {
    check_cell(n, l);
    const auto [a, b] = products(n, l);
    return 2.0 * std::sqrt(a) * (std::sqrt(a) - std::sqrt(b)) / (static_cast<double>(n) * (n - 1));
}

double c1_rest_squared(int n, int l) {
    check_cell(n, l);
    return 4.0 * products(n, l).outer / (static_cast<double>(n) * n);
}

ChiRoutes chi_routes(int n, int l) {
    check_cell(n, l);
    const double c12 = c12_closed_form(n, l);
    const auto [a, b] = products(n, l);
    ChiRoutes r;
    r.by_definition = c1_rest_squared(n, l) - (n - 1) * c12 * c12;
    r.closed_form = 8.0 * a * std::sqrt(b) * (std::sqrt(a) - std::sqrt(b)) / (static_cast<double>(n) * n * (n - 1));
    return r;
}

double chi(int n, int l) {
    const ChiRoutes r = chi_routes(n, l);
    if (std::abs(r.by_definition - r.closed_form) > kChiRouteTolerance) {
        throw NumericalError("chi(" + std::to_string(n) + "," + std::to_string(l) + "): routes disagree, " +
                             fmt17(r.by_definition) + " vs " + fmt17(r.closed_form));
    }
    return r.closed_form;
}

double chi_row_maximum(int n) {
    if (n < 2) throw ValidationError("chi_row_maximum: n must be >= 2");
    const double m = n;
    if (n % 2 == 0) return (m - 2) / (m - 1);
    if (n < 3) throw ValidationError("chi_row_maximum: odd n must be >= 3");
    return (m + 1) * (m - 1) * std::sqrt(m - 3) * (std::sqrt(m + 1) - std::sqrt(m - 3)) / (2 * m * m);
}

MonogamyReport monogamy_report(int n, int l, bool numeric) {
    check_cell(n, l);
    MonogamyReport r;
    r.n = n;
    r.l = l;
    r.c12 = c12_closed_form(n, l);
    r.c1_rest_sq = c1_rest_squared(n, l);
    const ChiRoutes routes = chi_routes(n, l);
    r.chi = chi(n, l);
    r.chi_closed_form = routes.closed_form;
    r.is_even_max = n % 2 == 0 && 2 * l == n;
    r.is_max = r.is_even_max || (n % 2 == 1 && (2 * l == n - 1 || 2 * l == n + 1));
    if (numeric) {
        const int keep[] = {1, 2};
        r.c12_numeric = wootters_concurrence(partial_trace(dicke_state(DickeSpec(n, l)), keep));
    }
    if (l == 1 || l == n - 1) {
        r.notes.emplace_back("W-class cell: maximal pairwise concurrence 2/n, chi = 0");
    }
    if (r.is_even_max) {
        r.notes.emplace_back("even-n maximum: chi = (n-2)/(n-1), C^2_1(rest) = 1, minimal pairwise concurrence 1/(n-1)");
    } else if (r.is_max) {
        r.notes.emplace_back("odd-n maximum of chi; minimal pairwise concurrence, C^2_1(rest) = (n^2-1)/n^2");
    }
    return r;
}

bool MonogamySweep::all_claims_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const SweepClaim &c) { return c.holds; });
}

MonogamySweep monogamy_sweep(int n_min, int n_max, int numeric_cap, int sweep_cap) {
    if (n_min < 2 || n_max < n_min || n_max > sweep_cap) {
        throw ValidationError("sweep: need 2 <= n_min <= n_max <= " + std::to_string(sweep_cap));
    }
    constexpr double tight = 1e-12;
    MonogamySweep sweep;
    sweep.n_min = n_min;
    sweep.n_max = n_max;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<MonogamyReport> row;
        for (int l = 1; l <= n - 1; ++l) row.push_back(monogamy_report(n, l, n <= numeric_cap));
        const auto at = [&](int l) -> const MonogamyReport & { return row[static_cast<std::size_t>(l - 1)]; };
        const auto claim = [&](std::string name, bool holds, std::string detail) {
            sweep.claims.push_back({std::move(name), n, holds, std::move(detail)});
        };
        const int half = n / 2;
        const double m = n;

        bool ok = std::abs(at(1).c12 - 2.0 / m) <= tight;
        for (const auto &r : row) ok = ok && r.c12 <= at(1).c12 + tight;
        claim("w_maximal_pairwise_concurrence", ok, "C12(n,1) = " + fmt17(at(1).c12));

        const double min_expected =
            n % 2 == 0 ? 1.0 / (m - 1) : ((m + 1) - std::sqrt((m + 1) * (m - 3))) / (2 * m);
        ok = n < 3 || std::abs(at(half).c12 - min_expected) <= tight;
        for (const auto &r : row) ok = ok && r.c12 >= at(half).c12 - tight;
        claim("minimal_pairwise_concurrence", ok, "C12(n," + std::to_string(half) + ") = " + fmt17(at(half).c12));

        bool c12_dec = true;
        bool rest_inc = true;
        bool chi_inc = true;
        for (int l = 1; l < half; ++l) {
            c12_dec = c12_dec && at(l + 1).c12 < at(l).c12;
            rest_inc = rest_inc && at(l + 1).c1_rest_sq > at(l).c1_rest_sq;
            chi_inc = chi_inc && at(l + 1).chi > at(l).chi;
        }
        bool chi_dec = true;
        for (int l = n - half; l < n - 1; ++l) chi_dec = chi_dec && at(l + 1).chi < at(l).chi;
        claim("pairwise_concurrence_decreasing", c12_dec, "strict on 1 <= l <= floor(n/2)");
        claim("one_vs_rest_increasing", rest_inc, "strict on 1 <= l <= floor(n/2)");
        claim("chi_rises_then_falls", chi_inc && chi_dec, "strict rise up to floor(n/2), fall from ceil(n/2)");

        const double rest_max = n % 2 == 0 ? 1.0 : (m * m - 1) / (m * m);
        claim("one_vs_rest_extremes",
              std::abs(at(1).c1_rest_sq - 4 * (m - 1) / (m * m)) <= tight &&
                  std::abs(at(half).c1_rest_sq - rest_max) <= tight,
              "W minimum 4(n-1)/n^2, maximum " + fmt17(rest_max));

        if (n >= 3) {
            double best = 0.0;
            for (const auto &r : row) best = std::max(best, r.chi);
            const double expected = chi_row_maximum(n);
            claim("chi_row_maximum", std::abs(at(half).chi - expected) <= tight && best <= expected + tight,
                  "chi(n," + std::to_string(half) + ") = " + fmt17(at(half).chi) + ", expected " + fmt17(expected));
        }

        bool sym = true;
        bool bounds = true;
        for (int l = 1; l <= n - 1; ++l) {
            sym = sym && at(l).chi == at(n - l).chi;
            if (l >= 2 && l <= n - 2) bounds = bounds && at(l).chi > 0.0 && at(l).chi < 1.0;
        }
        claim("chi_symmetric", sym, "chi(n,l) == chi(n,n-l)");
        claim("chi_strictly_inside_unit_interval", bounds && at(1).chi == 0.0,
              "0 < chi < 1 for 2 <= l <= n-2, chi = 0 at l = 1");

        if (n <= numeric_cap) {
            double worst = 0.0;
            for (const auto &r : row) worst = std::max(worst, std::abs(*r.c12_numeric - r.c12));
            claim("pairwise_concurrence_pipeline_agrees", worst <= 1e-10, "max deviation " + fmt17(worst));
        }
        for (auto &r : row) sweep.rows.push_back(std::move(r));
    }
    return sweep;
}

std::string to_csv(const MonogamySweep &sweep) {
    std::ostringstream os;
    os << "n,l,c12,c12_numeric,c1_rest_sq,chi,is_max\n";
    for (const auto &r : sweep.rows) {
        os << r.n << ',' << r.l << ',' << fmt17(r.c12) << ',' << (r.c12_numeric ? fmt17(*r.c12_numeric) : "")
           << ',' << fmt17(r.c1_rest_sq) << ',' << fmt17(r.chi) << ',' << (r.is_max ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace dicke
