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

#include "dicke/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

void check_qubit_count(int n, int max_qubits, const char *what) {
    if (max_qubits > 62) {
        throw ValidationError("qubit cap " + std::to_string(max_qubits) + " exceeds the addressable limit 62");
    }
    if (n < 2 || n > max_qubits) {
        throw ValidationError(std::string(what) + ": qubit count " + std::to_string(n) + " outside [2, " +
                              std::to_string(max_qubits) + "]");
    }
}

// Next integer with the same popcount (Gosper's hack).
BasisIndex next_same_weight(BasisIndex v) {
    const BasisIndex t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

template <typename F>
void for_each_weight(int n, int l, F &&fn) {
    if (l == 0) {
        fn(BasisIndex{0});
        return;
    }
    const BasisIndex end = dimension(n);
    for (BasisIndex v = (BasisIndex{1} << l) - 1; v < end; v = next_same_weight(v)) {
        fn(v);
    }
}

void check_positions(int n, std::span<const int> qubits, const char *what) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int q : qubits) {
        if (q < 1 || q > n) {
            throw ValidationError(std::string(what) + ": qubit position " + std::to_string(q) + " outside [1, " +
                                  std::to_string(n) + "]");
        }
        if (seen[q]) {
            throw ValidationError(std::string(what) + ": repeated qubit position " + std::to_string(q));
        }
        seen[q] = true;
    }
}

// Amplitudes reshaped into a matrix whose row index is formed by the `rows`
// qubits (first listed = most significant) and whose column index is formed
// by the remaining qubits in ascending order.
Eigen::MatrixXcd reshape_by_qubits(const StateVector &s, std::span<const int> rows) {
    const int n = s.num_qubits();
    const int k = static_cast<int>(rows.size());
    std::vector<int> cols;
    {
        std::vector<bool> in_rows(static_cast<std::size_t>(n) + 1, false);
        for (int q : rows) in_rows[q] = true;
        for (int q = 1; q <= n; ++q) {
            if (!in_rows[q]) cols.push_back(q);
        }
    }
    Eigen::MatrixXcd m(Eigen::Index{1} << k, Eigen::Index{1} << (n - k));
    const auto amps = s.amplitudes();
    for (BasisIndex i = 0; i < s.dim(); ++i) {
        Eigen::Index r = 0;
        for (int q : rows) r = (r << 1) | static_cast<Eigen::Index>((i >> bit_of_qubit(n, q)) & 1U);
        Eigen::Index c = 0;
        for (int q : cols) c = (c << 1) | static_cast<Eigen::Index>((i >> bit_of_qubit(n, q)) & 1U);
        m(r, c) = amps[i];
    }
    return m;
}

}  // namespace

StateVector::StateVector(int n, std::vector<Complex> amplitudes, int max_qubits)
    : n_(n), amplitudes_(std::move(amplitudes)), norm_squared_(0.0) {
    check_qubit_count(n, max_qubits, "state");
    if (amplitudes_.size() != dimension(n)) {
        throw ValidationError("state: expected " + std::to_string(dimension(n)) + " amplitudes for n=" +
                              std::to_string(n) + ", got " + std::to_string(amplitudes_.size()));
    }
    for (const Complex &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("state: non-finite amplitude");
        }
        norm_squared_ += std::norm(a);
    }
}

bool StateVector::is_normalized() const noexcept { return std::abs(norm_squared_ - 1.0) <= kNormTolerance; }

StateVector IntegerState::to_state() const {
    const double scale = 1.0 / std::sqrt(static_cast<double>(norm_squared));
    std::vector<Complex> amps(amplitudes.size());
    std::transform(amplitudes.begin(), amplitudes.end(), amps.begin(),
                   [scale](std::int64_t a) { return Complex(static_cast<double>(a) * scale, 0.0); });
    return StateVector(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

DickeSpec::DickeSpec(int n, int l, int max_qubits) : n_(n), l_(l) {
    check_qubit_count(n, max_qubits, "dicke");
    if (l < 1 || l > n - 1) {
        throw ValidationError("dicke: excitation count l=" + std::to_string(l) + " outside [1, " +
                              std::to_string(n - 1) + "]");
    }
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : k_(0), entries_(std::move(entries)) {
    const auto d = entries_.rows();
    if (d != entries_.cols() || d < 2 || (d & (d - 1)) != 0) {
        throw ValidationError("density matrix must be square with a power-of-two dimension");
    }
    k_ = std::countr_zero(static_cast<std::uint64_t>(d));
}

bool DensityMatrix::is_hermitian(double tol) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double DensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd herm = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid(double tol, double eig_tol) const {
    return is_hermitian(tol) && std::abs(trace() - 1.0) <= tol && min_eigenvalue() >= eig_tol;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int j = 1; j <= k; ++j) {
        r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    }
    return r;
}

StateVector dicke_state(const DickeSpec &spec) {
    const int n = spec.n();
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n, spec.l())));
    std::vector<Complex> amps(dimension(n));
    for_each_weight(n, spec.l(), [&](BasisIndex i) { amps[i] = amp; });
    return StateVector(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

StateVector ghz_state(int n, int max_qubits) {
    check_qubit_count(n, max_qubits, "ghz");
    std::vector<Complex> amps(dimension(n));
    amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
    return StateVector(n, std::move(amps), max_qubits);
}

StateVector w_state(int n, int max_qubits) { return dicke_state(DickeSpec(n, 1, max_qubits)); }

StateVector basis_state(int n, BasisIndex i) {
    check_qubit_count(n, std::max(n, kDefaultMaxQubits), "basis");
    if (i >= dimension(n)) throw ValidationError("basis: index out of range");
    std::vector<Complex> amps(dimension(n));
    amps[i] = 1.0;
    return StateVector(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const int n = a.num_qubits() + b.num_qubits();
    std::vector<Complex> amps(dimension(n));
    for (BasisIndex i = 0; i < a.dim(); ++i) {
        for (BasisIndex j = 0; j < b.dim(); ++j) {
            amps[(i << b.num_qubits()) | j] = a[i] * b[j];
        }
    }
    return StateVector(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

StateVector product_state(std::span<const std::array<Complex, 2>> qubits) {
    const int n = static_cast<int>(qubits.size());
    check_qubit_count(n, std::max(n, kDefaultMaxQubits), "product");
    std::vector<Complex> amps(dimension(n));
    for (BasisIndex i = 0; i < amps.size(); ++i) {
        Complex a = 1.0;
        for (int q = 1; q <= n; ++q) a *= qubits[q - 1][(i >> bit_of_qubit(n, q)) & 1U];
        amps[i] = a;
    }
    return StateVector(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

IntegerState exact_dicke_state(const DickeSpec &spec) {
    IntegerState s{spec.n(), std::vector<std::int64_t>(dimension(spec.n())),
                   static_cast<std::int64_t>(binomial(spec.n(), spec.l()))};
    for_each_weight(spec.n(), spec.l(), [&](BasisIndex i) { s.amplitudes[i] = 1; });
    return s;
}

IntegerState exact_ghz_state(int n, int max_qubits) {
    check_qubit_count(n, max_qubits, "ghz");
    IntegerState s{n, std::vector<std::int64_t>(dimension(n)), 2};
    s.amplitudes.front() = s.amplitudes.back() = 1;
    return s;
}

IntegerState exact_w_state(int n, int max_qubits) { return exact_dicke_state(DickeSpec(n, 1, max_qubits)); }

StateVector complement(const StateVector &s) {
    const BasisIndex mask = s.dim() - 1;
    std::vector<Complex> amps(s.dim());
    for (BasisIndex i = 0; i < s.dim(); ++i) amps[i ^ mask] = s[i];
    return StateVector(s.num_qubits(), std::move(amps), std::max(s.num_qubits(), kDefaultMaxQubits));
}

StateVector permute_qubits(const StateVector &s, std::span<const int> perm) {
    const int n = s.num_qubits();
    if (static_cast<int>(perm.size()) != n) throw ValidationError("permute: permutation length must equal n");
    check_positions(n, perm, "permute");
    std::vector<Complex> amps(s.dim());
    for (BasisIndex i = 0; i < s.dim(); ++i) {
        BasisIndex j = 0;
        for (int q = 1; q <= n; ++q) {
            j |= ((i >> bit_of_qubit(n, q)) & 1U) << bit_of_qubit(n, perm[q - 1]);
        }
        amps[j] = s[i];
    }
    return StateVector(n, std::move(amps), std::max(n, kDefaultMaxQubits));
}

DensityMatrix partial_trace(const StateVector &s, std::span<const int> keep) {
    if (keep.empty()) throw ValidationError("partial_trace: keep set is empty");
    check_positions(s.num_qubits(), keep, "partial_trace");
    const Eigen::MatrixXcd m = reshape_by_qubits(s, keep);
    return DensityMatrix(m * m.adjoint());
}

bool is_product_across(const StateVector &s, std::span<const int> part) {
    const int n = s.num_qubits();
    if (part.empty() || static_cast<int>(part.size()) >= n) {
        throw ValidationError("is_product_across: part must be a proper nonempty subset of the qubits");
    }
    check_positions(n, part, "is_product_across");
    std::vector<int> rows(part.begin(), part.end());
    std::sort(rows.begin(), rows.end());
    Eigen::MatrixXcd m = reshape_by_qubits(s, rows);
    if (m.rows() > m.cols()) m.transposeInPlace();
    const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
    if (sv(0) == 0.0) throw ValidationError("is_product_across: zero state");
    return sv.size() < 2 || sv(1) <= kRankTolerance * sv(0);
}

bool is_genuinely_entangled(const StateVector &s) {
    const int n = s.num_qubits();
    if (n > kMaxExhaustiveQubits) {
        throw ValidationError("is_genuinely_entangled: exhaustive cut enumeration limited to n <= " +
                              std::to_string(kMaxExhaustiveQubits));
    }
    // Every cut is listed once as the side containing qubit 1.
    const std::uint64_t others = std::uint64_t{1} << (n - 1);
    std::vector<int> part;
    for (std::uint64_t mask = 0; mask + 1 < others; ++mask) {
        part.assign(1, 1);
        for (int q = 2; q <= n; ++q) {
            if ((mask >> (q - 2)) & 1U) part.push_back(q);
        }
        if (is_product_across(s, part)) return false;
    }
    return true;
}

}  // namespace dicke
