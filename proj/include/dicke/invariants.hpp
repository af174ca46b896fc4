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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dicke/state.hpp"

namespace dicke {

inline constexpr double kZeroTolerance = 1e-10;

__extension__ typedef __int128 Int128;

enum class Parity { even, odd };

inline Parity parity_of(int n) noexcept { return n % 2 == 0 ? Parity::even : Parity::odd; }
const char *to_string(Parity p) noexcept;

/// Reduced fraction num/den with den > 0.
class Rational {
  public:
    Rational() = default;
    Rational(Int128 num, Int128 den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const noexcept { return num_ == 0; }
    std::string to_string() const;

    friend bool operator==(const Rational &, const Rational &) = default;

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Sign factor of the even/odd pairing sums: (-1)^N(i) on the lower half of
/// 0..2^(n-2)-1 and (-1)^(n+N(i)) on the upper half. For even n both halves
/// reduce to (-1)^N(i).
int sgn_star(int n, BasisIndex i);

/// Pairing sum
///   sum_{i < 2^(m-2)} sgn*(m,i) (a[off+2i] a[mir(i)] - a[off+2i+1] a[mir(i)-1]),
///   mir(i) = off + 2^m - 1 - 2i.
/// Valid combinations: (m = n, off = 0) for even n; (m = n-1, off in {0, 2^(n-1)})
/// for odd n. With m = n-1 the pairing stays inside the half selected by
/// `offset`.
Complex i_star(const StateVector &s, int m, BasisIndex offset);

/// Odd-n cross sum pairing index k with its full complement 2^n-1-k, with
/// the middle block subtracted. n must be odd and >= 3.
Complex i_bar(const StateVector &s);

/// Residual-entanglement invariant. Even n:
///   2 |sum_{k < 2^(n-1)} (-1)^N(k) a_k a_{2^n-1-k}|
/// Odd n:
///   4 |Ibar^2 - 4 I*(a,n-1) I*_{+2^(n-1)}(a,n-1)|
/// Degree 2 in the amplitudes for even n and degree 4 for odd n.
double tau(const StateVector &s);

/// Even-n tau evaluated through the sgn*-weighted pair sum, 2 |I*(a,n)|.
/// Algebraically identical to tau(); kept as a second route.
double tau_paired(const StateVector &s);

/// 0 for l = 2, else 2^4 + ... + 2^(l+1) = 2^(l+2) - 16.
BasisIndex delta_offset(int l);

/// Degree-4 discriminant over the 16 amplitudes b[delta + 0..15]:
///   (b1 b4 - b0 b5)(b11 b14 - b10 b15) - (b3 b6 - b2 b7)(b9 b12 - b8 b13).
/// Requires 2 <= l <= n-2.
Complex d_l(const StateVector &s, int l);

/// Exact counterparts on integer amplitudes; the symbolic normalizer is
/// divided out so the results are the values for the normalized state.
Rational tau_exact(const IntegerState &s);
Rational d_l_exact(const IntegerState &s, int l);

/// max(1, sum |a_i|^2)^(degree/2): magnitude reference for a homogeneous
/// polynomial of the given degree.
double zero_scale(const StateVector &s, int degree = 2);

struct InvariantReport {
    int n = 0;
    double tau = 0.0;
    Parity tau_parity = Parity::even;
    std::map<int, Complex> d_values;
    /// "tau" and "d<l>" keys.
    std::map<std::string, bool> zero_flags;
    bool exact_mode = false;
    std::optional<Rational> tau_exact;
    std::map<int, Rational> d_exact;
    double zero_tolerance = kZeroTolerance;
    double scale = 1.0;
};

/// tau plus D^(l) for every l in 2..n-2. A quantity of degree d is flagged
/// zero when |value| <= eps_zero * zero_scale(s, d). `scale` in the report is
/// max(1, sum |a_i|^2).
InvariantReport invariant_report(const StateVector &s, double eps_zero = kZeroTolerance);
InvariantReport invariant_report(const IntegerState &s);

struct CrossTableEntry {
    int k = 0;
    int l = 0;
    Rational value;
};

/// D^(k)(|l,n>) for all 2 <= k, l <= n-2 in exact mode. `deviations` lists
/// the (k, l) cells that break the pattern "zero off the diagonal, nonzero on
/// it"; the pattern is an observation, not a proven property.
struct CrossTable {
    int n = 0;
    std::vector<CrossTableEntry> entries;
    std::vector<std::pair<int, int>> deviations;
};

CrossTable discriminant_cross_table(int n, int max_qubits = kDefaultMaxQubits);

}  // namespace dicke
