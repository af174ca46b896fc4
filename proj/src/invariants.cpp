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

#include "dicke/invariants.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

// The kernels below are written once over any amplitude type with ring
// operations: std::complex<double> for numeric states, Int128 on the
// integer states of the exact mode. Sums run in ascending index order.

template <typename T>
T pair_sum(std::span<const T> a, int m, BasisIndex offset) {
    const BasisIndex terms = BasisIndex{1} << (m - 2);
    const BasisIndex mirror0 = offset + dimension(m) - 1;
    T sum{};
    for (BasisIndex i = 0; i < terms; ++i) {
        const BasisIndex mir = mirror0 - 2 * i;
        const T term = a[offset + 2 * i] * a[mir] - a[offset + 2 * i + 1] * a[mir - 1];
        if (sgn_star(m, i) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

template <typename T>
T bar_sum(std::span<const T> a, int n) {
    const BasisIndex half = dimension(n - 1);
    const BasisIndex top = dimension(n) - 1;
    const BasisIndex terms = BasisIndex{1} << (n - 3);
    T sum{};
    for (BasisIndex i = 0; i < terms; ++i) {
        const T outer = a[2 * i] * a[top - 2 * i] - a[2 * i + 1] * a[top - 1 - 2 * i];
        const T inner = a[half - 2 - 2 * i] * a[half + 1 + 2 * i] - a[half - 1 - 2 * i] * a[half + 2 * i];
        if (popcount(i) % 2 == 0) {
            sum += outer - inner;
        } else {
            sum -= outer - inner;
        }
    }
    return sum;
}

// Even n: sum_{k < 2^(n-1)} (-1)^N(k) a_k a_{2^n-1-k}.
template <typename T>
T even_sum(std::span<const T> a, int n) {
    const BasisIndex top = dimension(n) - 1;
    T sum{};
    for (BasisIndex k = 0; k <= top / 2; ++k) {
        if (popcount(k) % 2 == 0) {
            sum += a[k] * a[top - k];
        } else {
            sum -= a[k] * a[top - k];
        }
    }
    return sum;
}

// Odd n: Ibar^2 - 4 I*(a,n-1) I*_{+2^(n-1)}(a,n-1).
template <typename T>
T odd_core(std::span<const T> a, int n) {
    const T bar = bar_sum(a, n);
    const T low = pair_sum(a, n - 1, 0);
    const T high = pair_sum(a, n - 1, dimension(n - 1));
    return bar * bar - T(4) * low * high;
}

template <typename T>
T discriminant(std::span<const T> b, BasisIndex delta) {
    const auto at = [&](unsigned k) -> const T & { return b[delta + k]; };
    return (at(1) * at(4) - at(0) * at(5)) * (at(11) * at(14) - at(10) * at(15)) -
           (at(3) * at(6) - at(2) * at(7)) * (at(9) * at(12) - at(8) * at(13));
}

void check_d_range(int n, int l) {
    if (l < 2 || l > n - 2) {
        throw ValidationError("d_l: l=" + std::to_string(l) + " outside [2, " + std::to_string(n - 2) + "] for n=" +
                              std::to_string(n));
    }
}

std::vector<Int128> widen(const IntegerState &s) {
    if (s.amplitudes.size() != dimension(s.n) || s.norm_squared <= 0) {
        throw ValidationError("integer state: inconsistent amplitude count or normalizer");
    }
    return {s.amplitudes.begin(), s.amplitudes.end()};
}

Int128 abs128(Int128 x) { return x < 0 ? -x : x; }

}  // namespace

const char *to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

Rational::Rational(Int128 num, Int128 den) {
    if (den == 0) throw NumericalError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int128 a = abs128(num);
    Int128 b = den;
    while (b != 0) {
        const Int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr Int128 lim = std::numeric_limits<std::int64_t>::max();
    if (abs128(num) > lim || den > lim) throw NumericalError("rational overflow in exact mode");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

int sgn_star(int n, BasisIndex i) {
    if (n < 2) throw ValidationError("sgn_star: n must be >= 2");
    if (i >= (BasisIndex{1} << (n - 2))) throw ValidationError("sgn_star: index out of range");
    const bool upper = n >= 3 && i >= (BasisIndex{1} << (n - 3));
    const int exponent = popcount(i) + (upper ? n : 0);
    return exponent % 2 == 0 ? 1 : -1;
}

Complex i_star(const StateVector &s, int m, BasisIndex offset) {
    const int n = s.num_qubits();
    const bool full = m == n && n % 2 == 0 && offset == 0;
    const bool half = m == n - 1 && n % 2 == 1 && (offset == 0 || offset == dimension(n - 1));
    if (!full && !half) {
        throw ValidationError("i_star: (m=" + std::to_string(m) + ", offset=" + std::to_string(offset) +
                              ") is not a valid combination for n=" + std::to_string(n));
    }
    return pair_sum(s.amplitudes(), m, offset);
}

Complex i_bar(const StateVector &s) {
    const int n = s.num_qubits();
    if (n % 2 == 0 || n < 3) throw ValidationError("i_bar: requires odd n >= 3");
    return bar_sum(s.amplitudes(), n);
}

double tau(const StateVector &s) {
    const int n = s.num_qubits();
    if (n % 2 == 0) return 2.0 * std::abs(even_sum(s.amplitudes(), n));
    return 4.0 * std::abs(odd_core(s.amplitudes(), n));
}

double tau_paired(const StateVector &s) {
    const int n = s.num_qubits();
    if (n % 2 != 0) throw ValidationError("tau_paired: requires even n");
    return 2.0 * std::abs(pair_sum(s.amplitudes(), n, 0));
}

BasisIndex delta_offset(int l) {
    if (l < 2) throw ValidationError("delta_offset: l must be >= 2");
    if (l > 60) throw ValidationError("delta_offset: l too large");
    return l == 2 ? 0 : (BasisIndex{1} << (l + 2)) - 16;
}

Complex d_l(const StateVector &s, int l) {
    check_d_range(s.num_qubits(), l);
    return discriminant(s.amplitudes(), delta_offset(l));
}

Rational tau_exact(const IntegerState &s) {
    const auto a = widen(s);
    const std::span<const Int128> view(a);
    const Int128 norm = s.norm_squared;
    if (s.n % 2 == 0) return Rational(2 * abs128(even_sum(view, s.n)), norm);
    return Rational(4 * abs128(odd_core(view, s.n)), norm * norm);
}

Rational d_l_exact(const IntegerState &s, int l) {
    check_d_range(s.n, l);
    const auto a = widen(s);
    const Int128 norm = s.norm_squared;
    return Rational(discriminant(std::span<const Int128>(a), delta_offset(l)), norm * norm);
}

double zero_scale(const StateVector &s, int degree) {
    return std::pow(std::max(1.0, s.norm_squared()), degree / 2.0);
}

InvariantReport invariant_report(const StateVector &s, double eps_zero) {
    const int n = s.num_qubits();
    InvariantReport r;
    r.n = n;
    r.tau = tau(s);
    r.tau_parity = parity_of(n);
    r.zero_tolerance = eps_zero;
    r.scale = zero_scale(s, 2);
    const int tau_degree = n % 2 == 0 ? 2 : 4;
    r.zero_flags["tau"] = r.tau <= eps_zero * zero_scale(s, tau_degree);
    const double d_scale = zero_scale(s, 4);
    for (int l = 2; l <= n - 2; ++l) {
        const Complex d = d_l(s, l);
        r.d_values[l] = d;
        r.zero_flags["d" + std::to_string(l)] = std::abs(d) <= eps_zero * d_scale;
    }
    return r;
}

InvariantReport invariant_report(const IntegerState &s) {
    InvariantReport r;
    r.n = s.n;
    r.exact_mode = true;
    r.tau_parity = parity_of(s.n);
    r.tau_exact = tau_exact(s);
    r.tau = r.tau_exact->to_double();
    r.zero_flags["tau"] = r.tau_exact->is_zero();
    for (int l = 2; l <= s.n - 2; ++l) {
        const Rational d = d_l_exact(s, l);
        r.d_exact[l] = d;
        r.d_values[l] = Complex(d.to_double(), 0.0);
        r.zero_flags["d" + std::to_string(l)] = d.is_zero();
    }
    return r;
}

CrossTable discriminant_cross_table(int n, int max_qubits) {
    if (n < 4) throw ValidationError("cross table: n must be >= 4");
    CrossTable t;
    t.n = n;
    for (int l = 2; l <= n - 2; ++l) {
        const IntegerState s = exact_dicke_state(DickeSpec(n, l, max_qubits));
        for (int k = 2; k <= n - 2; ++k) {
            const Rational d = d_l_exact(s, k);
            t.entries.push_back({k, l, d});
            if (d.is_zero() == (k == l)) t.deviations.emplace_back(k, l);
        }
    }
    return t;
}

}  // namespace dicke
