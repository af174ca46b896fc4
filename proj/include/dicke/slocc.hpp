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
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dicke/invariants.hpp"
#include "dicke/state.hpp"

namespace dicke {

using Mat2 = Eigen::Matrix2cd;

inline constexpr double kInvertibilityFloor = 0.05;
inline constexpr double kCovarianceTolerance = 1e-8;

/// One invertible 2x2 operator per qubit: F(1) (x) F(2) (x) ... (x) F(n),
/// F(k) acting on qubit k.
class LocalOperatorChain {
  public:
    /// Throws ValidationError when fewer than two operators are given or any
    /// |det F(k)| < det_floor.
    explicit LocalOperatorChain(std::vector<Mat2> ops, double det_floor = kInvertibilityFloor);

    static LocalOperatorChain identity(int n);
    /// The same operator on every qubit.
    static LocalOperatorChain uniform(int n, const Mat2 &op);

    int num_qubits() const noexcept { return static_cast<int>(ops_.size()); }
    /// Operator on qubit q, 1-based.
    const Mat2 &op(int q) const { return ops_.at(static_cast<std::size_t>(q - 1)); }
    std::span<const Mat2> ops() const noexcept { return ops_; }
    std::span<const Complex> dets() const noexcept { return dets_; }
    /// prod_k |det F(k)|^power.
    double det_product(int power) const;

  private:
    std::vector<Mat2> ops_;
    std::vector<Complex> dets_;
};

/// Per-qubit product outer(k) * inner(k): applying the result equals
/// applying `inner` and then `outer`.
LocalOperatorChain compose(const LocalOperatorChain &outer, const LocalOperatorChain &inner);

/// (F(1) (x) ... (x) F(n)) s, one qubit at a time. Not renormalized.
StateVector apply_local(const StateVector &s, const LocalOperatorChain &chain);

/// Seeded source of random invertible chains. Entries have real and
/// imaginary parts uniform in [-1, 1]; matrices below the determinant floor
/// are redrawn. Uses mt19937_64 with an explicit bits-to-double map, so the
/// stream is identical across standard libraries.
class IloSampler {
  public:
    explicit IloSampler(std::uint64_t seed, double det_floor = kInvertibilityFloor);

    LocalOperatorChain sample(int n);

    std::uint64_t drawn() const noexcept { return drawn_; }
    std::uint64_t accepted() const noexcept { return accepted_; }
    double acceptance_rate() const noexcept;

  private:
    double uniform_pm1();

    std::mt19937_64 engine_;
    double det_floor_;
    std::uint64_t drawn_ = 0;
    std::uint64_t accepted_ = 0;
};

LocalOperatorChain random_ilo(int n, std::uint64_t seed);

/// Compares tau(F s) against tau(s) * prod |det F(k)|^p, p = 1 for even n
/// and 2 for odd n.
struct CovarianceCheck {
    double tau_original = 0.0;
    double tau_transformed = 0.0;
    double predicted = 0.0;
    double residual = 0.0;
    /// max(1, predicted); residuals are judged relative to this.
    double scale = 1.0;
};

CovarianceCheck check_tau_covariance(const StateVector &s, const LocalOperatorChain &chain);

/// (F(1) (x) ... (x) F(n)) |GHZ>, evaluated amplitude by amplitude from the
/// chain entries f1..f4 (row-major) as
///   a_i = (prod_k f(k)_{2 i_k + 1} + prod_k f(k)_{2 i_k + 2}) / sqrt(2).
StateVector ghz_orbit_state(const LocalOperatorChain &chain);

/// (F(1) (x) ... (x) F(n)) |W>, evaluated as
///   a_i = sum_j prod_k f(k)_{2 i_k + (k == j ? 2 : 1)} / sqrt(n).
StateVector w_orbit_state(const LocalOperatorChain &chain);

enum class ReferenceClass { ghz, w, dicke_half };
enum class Rule { tau_mismatch, ghz_discriminant, w_discriminant };
enum class Status { distinct, unknown };
enum class Zeroness { zero, nonzero, indeterminate };

const char *to_string(ReferenceClass c) noexcept;
const char *to_string(Rule r) noexcept;
const char *to_string(Status s) noexcept;
const char *to_string(Zeroness z) noexcept;

struct Comparison {
    ReferenceClass reference = ReferenceClass::ghz;
    Status status = Status::unknown;
    std::vector<Rule> rules;
    std::string evidence;
};

/// One-sided SLOCC verdict. A comparison becomes `distinct` only when a rule
/// fires on a value that is clearly zero or clearly nonzero; nothing is ever
/// reported as equivalent.
struct Verdict {
    std::string subject;
    int n = 0;
    double tau = 0.0;
    Zeroness tau_zeroness = Zeroness::indeterminate;
    std::map<int, Zeroness> d_zeroness;
    std::vector<Comparison> comparisons;

    std::vector<ReferenceClass> classes_excluded() const;
    Status status(ReferenceClass c) const;
};

struct ClassifyOptions {
    double eps_zero = kZeroTolerance;
    /// Values between eps_zero*scale and guard*eps_zero*scale are neither
    /// zero nor nonzero.
    double guard = 1e3;
};

/// Decision rules, with references GHZ (tau = 1, D = 0), W (tau = 0, D = 0)
/// and, for even n >= 4, |n/2,n> (tau = 1):
///   tau nonzero        -> distinct from W;
///   tau zero           -> distinct from GHZ and |n/2,n>;
///   some D^(l) nonzero -> distinct from GHZ and W.
Verdict classify(const StateVector &s, std::string subject = "state", const ClassifyOptions &options = {});

struct OrbitReport {
    std::string subject;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    Parity parity = Parity::even;
    double max_residual = 0.0;
    double max_relative_residual = 0.0;
    double mean_relative_residual = 0.0;
    double tolerance = kCovarianceTolerance;
    bool passed = true;
    std::uint64_t matrices_drawn = 0;
    std::uint64_t matrices_accepted = 0;
    double acceptance_rate = 1.0;
    Verdict verdict;
};

/// Covariance campaign: trial t draws its chain from IloSampler(seed + t).
OrbitReport run_orbit_campaign(const StateVector &s, std::string subject, int trials, std::uint64_t seed,
                               double tolerance = kCovarianceTolerance);

}  // namespace dicke
