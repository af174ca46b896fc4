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
#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dicke {

using Complex = std::complex<double>;
using BasisIndex = std::uint64_t;

inline constexpr int kDefaultMaxQubits = 24;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kRankTolerance = 1e-10;
inline constexpr int kMaxExhaustiveQubits = 16;

/// Number of 1-bits in a basis index, i.e. the excitation count of |i>.
constexpr int popcount(BasisIndex i) noexcept { return std::popcount(i); }

constexpr BasisIndex dimension(int n) noexcept { return BasisIndex{1} << n; }

/// Bit position of qubit `q` (1-based). Qubit 1 is the most significant bit,
/// so the basis string |q1 q2 ... qn> reads as the binary literal of the index.
constexpr int bit_of_qubit(int n, int q) noexcept { return n - q; }

/// Dense pure state on n qubits. Immutable once constructed.
///
/// Amplitudes may be unnormalized (SLOCC images are not norm preserving);
/// `is_normalized()` reports whether the squared norm is 1 within
/// kNormTolerance.
class StateVector {
  public:
    /// Throws ValidationError if `amplitudes.size() != 2^n`, if n is outside
    /// [2, max_qubits] or if any entry is not finite.
    StateVector(int n, std::vector<Complex> amplitudes, int max_qubits = kDefaultMaxQubits);

    int num_qubits() const noexcept { return n_; }
    BasisIndex dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](BasisIndex i) const noexcept { return amplitudes_[i]; }

    double norm_squared() const noexcept { return norm_squared_; }
    bool is_normalized() const noexcept;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    int n_;
    std::vector<Complex> amplitudes_;
    double norm_squared_;
};

/// Integer-amplitude state with a symbolic normalizer: the physical state is
/// amplitudes / sqrt(norm_squared). Dicke, GHZ and W states are exactly
/// representable this way, which lets the invariants be evaluated as exact
/// rationals.
struct IntegerState {
    int n = 0;
    std::vector<std::int64_t> amplitudes;
    std::int64_t norm_squared = 1;

    StateVector to_state() const;
};

/// Symmetric Dicke state label |l,n>, 1 <= l <= n-1.
class DickeSpec {
  public:
    DickeSpec(int n, int l, int max_qubits = kDefaultMaxQubits);
    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }

  private:
    int n_;
    int l_;
};

/// Reduced density matrix over `k` kept qubits, basis ordered with the first
/// kept qubit as the most significant bit.
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    int num_qubits() const noexcept { return k_; }
    const Eigen::MatrixXcd &matrix() const noexcept { return entries_; }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

    double trace() const { return entries_.trace().real(); }
    bool is_hermitian(double tol = kNormTolerance) const;
    /// Smallest eigenvalue (Hermitian part).
    double min_eigenvalue() const;
    /// Hermitian, unit trace and PSD within the given tolerances.
    bool is_valid(double tol = kNormTolerance, double eig_tol = -1e-10) const;

  private:
    int k_;
    Eigen::MatrixXcd entries_;
};

std::uint64_t binomial(int n, int k);

StateVector dicke_state(const DickeSpec &spec);
StateVector ghz_state(int n, int max_qubits = kDefaultMaxQubits);
StateVector w_state(int n, int max_qubits = kDefaultMaxQubits);
/// Computational basis state |i> on n qubits.
StateVector basis_state(int n, BasisIndex i);
/// Tensor product a (x) b; qubits of `a` come first.
StateVector tensor(const StateVector &a, const StateVector &b);
/// |q1> (x) |q2> (x) ... from single-qubit vectors (q[0], q[1]).
StateVector product_state(std::span<const std::array<Complex, 2>> qubits);

IntegerState exact_dicke_state(const DickeSpec &spec);
IntegerState exact_ghz_state(int n, int max_qubits = kDefaultMaxQubits);
IntegerState exact_w_state(int n, int max_qubits = kDefaultMaxQubits);

/// Bitwise complement of every basis label, i.e. sigma_x on every qubit.
StateVector complement(const StateVector &s);

/// Applies the qubit permutation `perm` (perm[k] = new position of qubit k+1,
/// both 1-based) at the bit level.
StateVector permute_qubits(const StateVector &s, std::span<const int> perm);

/// Reduced density matrix on the qubits in `keep` (1-based, distinct), in
/// the order given.
DensityMatrix partial_trace(const StateVector &s, std::span<const int> keep);

/// True iff the amplitudes reshaped as a (part) x (rest) matrix have
/// numerical rank one: every singular value after the first is at most
/// kRankTolerance times the largest. `part` must be a proper nonempty subset.
bool is_product_across(const StateVector &s, std::span<const int> part);

/// No bipartition splits the state into a product. Enumerates all
/// 2^(n-1) - 1 cuts, so n is limited to kMaxExhaustiveQubits.
bool is_genuinely_entangled(const StateVector &s);

}  // namespace dicke
