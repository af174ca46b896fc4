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

#include <doctest.h>

#include <cmath>
#include <random>

#include "dicke/errors.hpp"
#include "dicke/invariants.hpp"
#include "dicke/slocc.hpp"
#include "dicke/state.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dicke;
using testing_helpers::exactly_equal;
using testing_helpers::max_abs_diff;
using testing_helpers::random_state;

namespace {

bool excludes(const Verdict &v, ReferenceClass c) { return v.status(c) == Status::distinct; }

bool cites(const Verdict &v, ReferenceClass c, Rule r) {
    for (const auto &cmp : v.comparisons)
        if (cmp.reference == c) return std::find(cmp.rules.begin(), cmp.rules.end(), r) != cmp.rules.end();
    return false;
}

}  // namespace

TEST_CASE("apply_local examples") {
    const StateVector d42 = dicke_state(DickeSpec(4, 2));
    CHECK(exactly_equal(apply_local(d42, LocalOperatorChain::identity(4)), d42));

    Mat2 x;
    x << 0, 1, 1, 0;
    for (int n = 2; n <= 8; ++n)
        for (int l = 1; l <= n - 1; ++l)
            CHECK(exactly_equal(apply_local(dicke_state(DickeSpec(n, l)), LocalOperatorChain::uniform(n, x)),
                                dicke_state(DickeSpec(n, n - l))));

    Mat2 d;
    d << 2, 0, 0, 1;
    const StateVector out = apply_local(ghz_state(2), LocalOperatorChain({d, Mat2::Identity()}));
    CHECK(std::abs(out[0] - Complex(2 / std::sqrt(2.0))) <= 1e-15);
    CHECK(out[1] == Complex{});
    CHECK(out[2] == Complex{});
    CHECK(std::abs(out[3] - Complex(1 / std::sqrt(2.0))) <= 1e-15);

    CHECK_THROWS_AS(apply_local(ghz_state(3), LocalOperatorChain::identity(4)), ValidationError);
}

TEST_CASE("apply_local matches the dense Kronecker product") {
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 7; ++n) {
        const StateVector s = random_state(n, rng);
        const LocalOperatorChain c = random_ilo(n, 100 + static_cast<std::uint64_t>(n));
        CHECK(max_abs_diff(apply_local(s, c), oracle::apply_kron(s, c)) <= 1e-12);
    }
}

TEST_CASE("chains compose per qubit") {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 8; ++n) {
        const StateVector s = random_state(n, rng);
        const LocalOperatorChain c1 = random_ilo(n, 7 * static_cast<std::uint64_t>(n));
        const LocalOperatorChain c2 = random_ilo(n, 7 * static_cast<std::uint64_t>(n) + 1);
        const StateVector two_step = apply_local(apply_local(s, c1), c2);
        const StateVector one_step = apply_local(s, compose(c2, c1));
        CHECK(max_abs_diff(two_step, {one_step.amplitudes().begin(), one_step.amplitudes().end()}) <= 1e-12);
    }
}

TEST_CASE("chain validation") {
    Mat2 singular;
    singular << 1, 1, 1, 1;
    CHECK_THROWS_AS(LocalOperatorChain({singular, Mat2::Identity()}), ValidationError);
    CHECK_THROWS_AS(LocalOperatorChain({Mat2::Identity()}), ValidationError);
    Mat2 small = Mat2::Identity() * 0.2;  // det 0.04
    CHECK_THROWS_AS(LocalOperatorChain({small, Mat2::Identity()}), ValidationError);
    CHECK_NOTHROW(LocalOperatorChain({small, Mat2::Identity()}, 0.01));
    const LocalOperatorChain c({Mat2::Identity() * 2.0, Mat2::Identity() * 3.0});
    CHECK(c.det_product(1) == doctest::Approx(36.0));
    CHECK(c.det_product(2) == doctest::Approx(1296.0));
}

TEST_CASE("random_ilo") {
    const LocalOperatorChain a = random_ilo(3, 42);
    const LocalOperatorChain b = random_ilo(3, 42);
    for (int q = 1; q <= 3; ++q) CHECK(a.op(q) == b.op(q));
    const LocalOperatorChain other = random_ilo(3, 43);
    CHECK(a.op(1) != other.op(1));

    IloSampler sampler(9);
    for (int i = 0; i < 1000; ++i) {
        const LocalOperatorChain c = sampler.sample(2);
        for (const auto &d : c.dets()) CHECK(std::abs(d) >= kInvertibilityFloor);
        for (const auto &m : c.ops())
            for (Eigen::Index k = 0; k < 4; ++k) {
                CHECK(std::abs(m(k).real()) <= 1.0);
                CHECK(std::abs(m(k).imag()) <= 1.0);
            }
    }
    CHECK(sampler.accepted() == 2000);
    CHECK(sampler.drawn() >= sampler.accepted());
    CHECK(sampler.acceptance_rate() > 0.5);
    CHECK(sampler.acceptance_rate() <= 1.0);
}

TEST_CASE("tau covariance") {
    const CovarianceCheck id = check_tau_covariance(ghz_state(4), LocalOperatorChain::identity(4));
    CHECK(id.residual == 0.0);

    IloSampler sampler(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const CovarianceCheck c = check_tau_covariance(ghz_state(4), sampler.sample(4));
        CHECK(c.residual <= kCovarianceTolerance * c.scale);
        const CovarianceCheck z = check_tau_covariance(dicke_state(DickeSpec(5, 2)), sampler.sample(5));
        CHECK(z.residual <= 1e-10 * z.scale);
        CHECK(z.predicted == 0.0);
    }

    std::mt19937_64 rng(77);
    for (int n = 2; n <= 10; ++n) {
        const StateVector s = random_state(n, rng);
        for (int trial = 0; trial < 10; ++trial) {
            const CovarianceCheck c = check_tau_covariance(s, sampler.sample(n));
            CHECK(c.residual <= kCovarianceTolerance * c.scale);
        }
    }
}

TEST_CASE("orbit amplitude formulas agree with apply_local") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(exactly_equal(ghz_orbit_state(LocalOperatorChain::identity(n)), ghz_state(n)));
        const StateVector w_id = w_orbit_state(LocalOperatorChain::identity(n));
        const StateVector w = w_state(n);
        CHECK(max_abs_diff(w_id, {w.amplitudes().begin(), w.amplitudes().end()}) <= 1e-15);
    }
    IloSampler sampler(5);
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const LocalOperatorChain c = sampler.sample(n);
            const StateVector g = apply_local(ghz_state(n), c);
            const StateVector w = apply_local(w_state(n), c);
            CHECK(max_abs_diff(ghz_orbit_state(c), {g.amplitudes().begin(), g.amplitudes().end()}) <= 1e-12);
            CHECK(max_abs_diff(w_orbit_state(c), {w.amplitudes().begin(), w.amplitudes().end()}) <= 1e-12);
            CHECK(max_abs_diff(ghz_orbit_state(c), oracle::apply_kron(ghz_state(n), c)) <= 1e-12);
            for (int l = 2; l <= n - 2; ++l) {
                const StateVector go = ghz_orbit_state(c);
                const StateVector wo = w_orbit_state(c);
                CHECK(std::abs(d_l(go, l)) <= 1e-10 * zero_scale(go, 4));
                CHECK(std::abs(d_l(wo, l)) <= 1e-10 * zero_scale(wo, 4));
            }
        }
    }
}

TEST_CASE("classification examples") {
    const Verdict d62 = classify(dicke_state(DickeSpec(6, 2)), "dicke(6,2)");
    CHECK(excludes(d62, ReferenceClass::ghz));
    CHECK(excludes(d62, ReferenceClass::w));
    CHECK(excludes(d62, ReferenceClass::dicke_half));
    CHECK(cites(d62, ReferenceClass::ghz, Rule::tau_mismatch));
    CHECK(cites(d62, ReferenceClass::ghz, Rule::ghz_discriminant));
    CHECK(cites(d62, ReferenceClass::w, Rule::w_discriminant));
    CHECK(cites(d62, ReferenceClass::dicke_half, Rule::tau_mismatch));
    CHECK(d62.classes_excluded().size() == 3);

    const Verdict d42 = classify(dicke_state(DickeSpec(4, 2)));
    CHECK(excludes(d42, ReferenceClass::w));
    CHECK(cites(d42, ReferenceClass::w, Rule::tau_mismatch));
    // tau matches GHZ, but D^(2) != 0 rules GHZ out anyway.
    CHECK(excludes(d42, ReferenceClass::ghz));
    CHECK(d42.status(ReferenceClass::dicke_half) == Status::unknown);

    const Verdict w5 = classify(w_state(5));
    CHECK(excludes(w5, ReferenceClass::ghz));
    CHECK(w5.status(ReferenceClass::w) == Status::unknown);
    const Verdict g5 = classify(ghz_state(5));
    CHECK(excludes(g5, ReferenceClass::w));
    CHECK(g5.status(ReferenceClass::ghz) == Status::unknown);
}

TEST_CASE("classification never separates a state from its own orbit") {
    IloSampler sampler(314);
    for (int n = 3; n <= 8; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const LocalOperatorChain c = sampler.sample(n);
            CHECK_FALSE(excludes(classify(apply_local(ghz_state(n), c)), ReferenceClass::ghz));
            CHECK_FALSE(excludes(classify(apply_local(w_state(n), c)), ReferenceClass::w));
            if (n % 2 == 0 && n >= 4)
                CHECK_FALSE(excludes(classify(apply_local(dicke_state(DickeSpec(n, n / 2)), c)),
                                     ReferenceClass::dicke_half));
        }
    }
}

TEST_CASE("borderline values are reported as unknown") {
    std::vector<Complex> a(16, 0.0);
    a[0] = 1.0;
    a[15] = 1e-8;  // tau = 2e-8, inside the guard band
    const Verdict v = classify(StateVector(4, a));
    CHECK(v.tau_zeroness == Zeroness::indeterminate);
    CHECK(v.status(ReferenceClass::w) == Status::unknown);
    CHECK(v.status(ReferenceClass::ghz) == Status::unknown);
}

TEST_CASE("orbit campaign") {
    const OrbitReport r = run_orbit_campaign(ghz_state(4), "ghz(4)", 50, 42);
    CHECK(r.passed);
    CHECK(r.trials == 50);
    CHECK(r.seed == 42);
    CHECK(r.parity == Parity::even);
    CHECK(r.max_relative_residual <= kCovarianceTolerance);
    CHECK(r.matrices_accepted == 50 * 4);
    const OrbitReport again = run_orbit_campaign(ghz_state(4), "ghz(4)", 50, 42);
    CHECK(again.max_residual == r.max_residual);
    const OrbitReport odd = run_orbit_campaign(w_state(5), "w(5)", 20, 1);
    CHECK(odd.parity == Parity::odd);
    CHECK(odd.passed);
    CHECK_THROWS_AS(run_orbit_campaign(ghz_state(4), "x", 0, 1), ValidationError);
}
