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

#include "dicke/slocc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

// Row-major entry f_idx, idx in 1..4, of a 2x2 operator.
const Complex &entry(const Mat2 &f, int idx) { return f((idx - 1) / 2, (idx - 1) % 2); }

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Zeroness judge(double magnitude, double scale, const ClassifyOptions &opt) {
    if (magnitude <= opt.eps_zero * scale) return Zeroness::zero;
    if (magnitude >= opt.guard * opt.eps_zero * scale) return Zeroness::nonzero;
    return Zeroness::indeterminate;
}

void mark(Verdict &v, ReferenceClass ref, Rule rule, const std::string &evidence) {
    for (Comparison &c : v.comparisons) {
        if (c.reference != ref) continue;
        c.status = Status::distinct;
        if (std::find(c.rules.begin(), c.rules.end(), rule) == c.rules.end()) c.rules.push_back(rule);
        if (!c.evidence.empty()) c.evidence += "; ";
        c.evidence += evidence;
    }
}

}  // namespace

LocalOperatorChain::LocalOperatorChain(std::vector<Mat2> ops, double det_floor) : ops_(std::move(ops)) {
    if (ops_.size() < 2) throw ValidationError("local operator chain needs at least two qubits");
    dets_.reserve(ops_.size());
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        const Complex d = ops_[k].determinant();
        if (!(std::abs(d) >= det_floor)) {
            throw ValidationError("local operator on qubit " + std::to_string(k + 1) + " has |det| = " +
                                  format_value(std::abs(d)) + " below the floor " + format_value(det_floor));
        }
        dets_.push_back(d);
    }
}

LocalOperatorChain LocalOperatorChain::identity(int n) { return uniform(n, Mat2::Identity()); }

LocalOperatorChain LocalOperatorChain::uniform(int n, const Mat2 &op) {
    return LocalOperatorChain(std::vector<Mat2>(static_cast<std::size_t>(std::max(n, 0)), op));
}

double LocalOperatorChain::det_product(int power) const {
    double p = 1.0;
    for (const Complex &d : dets_) p *= std::pow(std::abs(d), power);
    return p;
}

LocalOperatorChain compose(const LocalOperatorChain &outer, const LocalOperatorChain &inner) {
    if (outer.num_qubits() != inner.num_qubits()) throw ValidationError("compose: chain lengths differ");
    std::vector<Mat2> ops;
    ops.reserve(static_cast<std::size_t>(outer.num_qubits()));
    for (int q = 1; q <= outer.num_qubits(); ++q) ops.push_back(outer.op(q) * inner.op(q));
    return LocalOperatorChain(std::move(ops), 0.0);
}

StateVector apply_local(const StateVector &s, const LocalOperatorChain &chain) {
    const int n = s.num_qubits();
    if (chain.num_qubits() != n) {
        throw ValidationError("apply_local: chain has " + std::to_string(chain.num_qubits()) +
                              " operators for a " + std::to_string(n) + "-qubit state");
    }
    std::vector<Complex> a(s.amplitudes().begin(), s.amplitudes().end());
    for (int q = 1; q <= n; ++q) {
        const Mat2 &f = chain.op(q);
        const BasisIndex stride = BasisIndex{1} << bit_of_qubit(n, q);
        for (BasisIndex base = 0; base < a.size(); base += 2 * stride) {
            for (BasisIndex i = base; i < base + stride; ++i) {
                const Complex x0 = a[i];
                const Complex x1 = a[i + stride];
                a[i] = f(0, 0) * x0 + f(0, 1) * x1;
                a[i + stride] = f(1, 0) * x0 + f(1, 1) * x1;
            }
        }
    }
    return StateVector(n, std::move(a), std::max(n, kDefaultMaxQubits));
}

IloSampler::IloSampler(std::uint64_t seed, double det_floor) : engine_(seed), det_floor_(det_floor) {}

double IloSampler::uniform_pm1() {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

LocalOperatorChain IloSampler::sample(int n) {
    if (n < 2) throw ValidationError("random_ilo: n must be >= 2");
    std::vector<Mat2> ops;
    ops.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(ops.size()) < n) {
        Mat2 f;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                const double re = uniform_pm1();
                const double im = uniform_pm1();
                f(r, c) = Complex(re, im);
            }
        }
        ++drawn_;
        if (std::abs(f.determinant()) < det_floor_) continue;
        ++accepted_;
        ops.push_back(f);
    }
    return LocalOperatorChain(std::move(ops), det_floor_);
}

double IloSampler::acceptance_rate() const noexcept {
    return drawn_ == 0 ? 1.0 : static_cast<double>(accepted_) / static_cast<double>(drawn_);
}

LocalOperatorChain random_ilo(int n, std::uint64_t seed) { return IloSampler(seed).sample(n); }

CovarianceCheck check_tau_covariance(const StateVector &s, const LocalOperatorChain &chain) {
    CovarianceCheck c;
    c.tau_original = tau(s);
    c.tau_transformed = tau(apply_local(s, chain));
    const int power = s.num_qubits() % 2 == 0 ? 1 : 2;
    c.predicted = c.tau_original * chain.det_product(power);
    c.residual = std::abs(c.tau_transformed - c.predicted);
    c.scale = std::max(1.0, c.predicted);
    return c;
}

StateVector ghz_orbit_state(const LocalOperatorChain &chain) {
    const int n = chain.num_qubits();
    std::vector<Complex> a(dimension(n));
    const double norm = 1.0 / std::sqrt(2.0);
    for (BasisIndex i = 0; i < a.size(); ++i) {
        Complex zeros = 1.0;
        Complex ones = 1.0;
        for (int k = 1; k <= n; ++k) {
            const int bit = static_cast<int>((i >> bit_of_qubit(n, k)) & 1U);
            zeros *= entry(chain.op(k), 2 * bit + 1);
            ones *= entry(chain.op(k), 2 * bit + 2);
        }
        a[i] = (zeros + ones) * norm;
    }
    return StateVector(n, std::move(a), std::max(n, kDefaultMaxQubits));
}

StateVector w_orbit_state(const LocalOperatorChain &chain) {
    const int n = chain.num_qubits();
    std::vector<Complex> a(dimension(n));
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (BasisIndex i = 0; i < a.size(); ++i) {
        Complex sum = 0.0;
        for (int j = 1; j <= n; ++j) {
            Complex term = 1.0;
            for (int k = 1; k <= n; ++k) {
                const int bit = static_cast<int>((i >> bit_of_qubit(n, k)) & 1U);
                term *= entry(chain.op(k), 2 * bit + (k == j ? 2 : 1));
            }
            sum += term;
        }
        a[i] = sum * norm;
    }
    return StateVector(n, std::move(a), std::max(n, kDefaultMaxQubits));
}

const char *to_string(ReferenceClass c) noexcept {
    switch (c) {
        case ReferenceClass::ghz: return "GHZ";
        case ReferenceClass::w: return "W";
        case ReferenceClass::dicke_half: return "Dicke(n/2)";
    }
    return "?";
}

const char *to_string(Rule r) noexcept {
    switch (r) {
        case Rule::tau_mismatch: return "tau-mismatch";
        case Rule::ghz_discriminant: return "ghz-discriminant";
        case Rule::w_discriminant: return "w-discriminant";
    }
    return "?";
}

const char *to_string(Status s) noexcept { return s == Status::distinct ? "distinct" : "unknown"; }

const char *to_string(Zeroness z) noexcept {
    switch (z) {
        case Zeroness::zero: return "zero";
        case Zeroness::nonzero: return "nonzero";
        case Zeroness::indeterminate: return "indeterminate";
    }
    return "?";
}

std::vector<ReferenceClass> Verdict::classes_excluded() const {
    std::vector<ReferenceClass> out;
    for (const Comparison &c : comparisons) {
        if (c.status == Status::distinct) out.push_back(c.reference);
    }
    return out;
}

Status Verdict::status(ReferenceClass c) const {
    for (const Comparison &cmp : comparisons) {
        if (cmp.reference == c) return cmp.status;
    }
    return Status::unknown;
}

Verdict classify(const StateVector &s, std::string subject, const ClassifyOptions &options) {
    const int n = s.num_qubits();
    Verdict v;
    v.subject = std::move(subject);
    v.n = n;
    v.comparisons.push_back({ReferenceClass::ghz, Status::unknown, {}, {}});
    v.comparisons.push_back({ReferenceClass::w, Status::unknown, {}, {}});
    const bool has_half = n % 2 == 0 && n >= 4;
    if (has_half) v.comparisons.push_back({ReferenceClass::dicke_half, Status::unknown, {}, {}});

    v.tau = tau(s);
    v.tau_zeroness = judge(v.tau, zero_scale(s, n % 2 == 0 ? 2 : 4), options);
    const std::string tau_text = "tau = " + format_value(v.tau);
    if (v.tau_zeroness == Zeroness::nonzero) {
        mark(v, ReferenceClass::w, Rule::tau_mismatch, tau_text + " vs tau(W) = 0");
    } else if (v.tau_zeroness == Zeroness::zero) {
        mark(v, ReferenceClass::ghz, Rule::tau_mismatch, tau_text + " vs tau(GHZ) = 1");
        if (has_half) mark(v, ReferenceClass::dicke_half, Rule::tau_mismatch, tau_text + " vs tau(|n/2,n>) = 1");
    }

    const double d_scale = zero_scale(s, 4);
    for (int l = 2; l <= n - 2; ++l) {
        const double d = std::abs(d_l(s, l));
        const Zeroness z = judge(d, d_scale, options);
        v.d_zeroness[l] = z;
        if (z == Zeroness::nonzero) {
            const std::string text = "|D^(" + std::to_string(l) + ")| = " + format_value(d) + " != 0";
            mark(v, ReferenceClass::ghz, Rule::ghz_discriminant, text);
            mark(v, ReferenceClass::w, Rule::w_discriminant, text);
        }
    }
    return v;
}

OrbitReport run_orbit_campaign(const StateVector &s, std::string subject, int trials, std::uint64_t seed,
                               double tolerance) {
    if (trials < 1) throw ValidationError("orbit: trials must be >= 1");
    OrbitReport r;
    r.subject = std::move(subject);
    r.n = s.num_qubits();
    r.trials = trials;
    r.seed = seed;
    r.parity = parity_of(r.n);
    r.tolerance = tolerance;
    double sum_rel = 0.0;
    for (int t = 0; t < trials; ++t) {
        IloSampler sampler(seed + static_cast<std::uint64_t>(t));
        const CovarianceCheck c = check_tau_covariance(s, sampler.sample(r.n));
        r.matrices_drawn += sampler.drawn();
        r.matrices_accepted += sampler.accepted();
        const double rel = c.residual / c.scale;
        r.max_residual = std::max(r.max_residual, c.residual);
        r.max_relative_residual = std::max(r.max_relative_residual, rel);
        sum_rel += rel;
    }
    r.mean_relative_residual = sum_rel / trials;
    r.acceptance_rate = static_cast<double>(r.matrices_accepted) / static_cast<double>(r.matrices_drawn);
    r.passed = r.max_relative_residual <= tolerance;
    r.verdict = classify(s, r.subject);
    return r;
}

}  // namespace dicke
