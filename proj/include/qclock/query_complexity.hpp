// Copyright 2026 The qclock Authors
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

#ifndef QCLOCK_QUERY_COMPLEXITY_HPP
#define QCLOCK_QUERY_COMPLEXITY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qclock/clock_channel.hpp"
#include "qclock/rng.hpp"
#include "qclock/statevector.hpp"

namespace qclock {

/// (|0> + |1>)/sqrt2, one rate-1 query, Hadamard: cos(2 pi phi)|0> + i sin(2 pi phi)|1>.
StateVector single_rate_state(const ClockModel &clock);
StateVector single_rate_state(const ClockModel &clock, ResourceLedger &ledger);

struct ClassicalEstimate {
    /// Estimate of omega0 T, reported in [0, 1/2).
    double phase_hat = 0;
    double t_hat = 0;
    ResourceLedger ledger;
};

/// Sampling baseline using only rate-1 queries: S plain probes give cos^2,
/// S probes with an extra pi/4 Z-phase give the sign. Valid for
/// omega0 T in [0, 1/2); a photon-only probe cannot see the other half.
/// Throws std::invalid_argument when samples == 0.
ClassicalEstimate classical_estimate(const ClockModel &clock, std::uint64_t samples, Rng &rng);

/// Replaces one rate-k query on `photon` by k consecutive rate-1 queries.
void simulate_rate_k_with_unit_rate(const ClockModel &clock, std::uint64_t k, StateVector &state,
                                    Qubit photon, ResourceLedger &ledger);

struct LowerBoundParams {
    std::uint64_t N = 0;  // input-set size
    std::uint64_t t = 0;  // solution count
    double Delta = 0;     // approximation closeness

    double amplitude() const { return static_cast<double>(t) / static_cast<double>(N); }
};

/// sqrt(N/Delta) + sqrt(t(N - t))/Delta, the approximate-counting query bound
/// without its constant.
double nayak_wu_bound(const LowerBoundParams &params);

/// Probability that an m-bit phase estimation of phase psi reads x, as a
/// function of d = psi - x/2^m: sin^2(2^m pi d) / (2^m sin(pi d))^2.
double phase_estimation_kernel(unsigned register_bits, double d);

struct BudgetedEstimate {
    /// Estimate of omega0 T as an n-bit numerator.
    std::uint64_t numerator = 0;
    ResourceLedger ledger;
};

/// Estimates omega0 T to n_target bits with an m-qubit register only, i.e.
/// rate multipliers <= 2^m - 1. Bit windows are resolved from least to most
/// significant: window j phase-estimates frac(2^j omega0 T) using 2^j
/// consecutive queries per run, `repeats` runs per setting, and picks the
/// window's unknown bits by maximum likelihood given the bits below it.
/// With m = 1 a second setting shifts the register by 1/8 cycle to separate
/// psi from 1 - psi.
BudgetedEstimate estimate_with_budget(unsigned n_target, unsigned register_bits,
                                      std::uint64_t repeats, TqhChannel &channel, Rng &rng);

/// Queries estimate_with_budget spends; independent of the outcome.
std::uint64_t budgeted_query_cost(unsigned n_target, unsigned register_bits,
                                  std::uint64_t repeats);

struct TradeoffPoint {
    std::uint64_t F = 0;
    std::uint64_t Q = 0;
    unsigned n_bits_achieved = 0;
    double success_rate = 0;
    unsigned register_bits = 0;
    std::uint64_t repeats = 0;
};

struct TradeoffOptions {
    double success_threshold = 0.9;
    std::uint64_t max_repeats = 64;
    double omega0 = 1.0;
};

/// For each frequency budget F (a power of two <= 2^n_target), the cheapest
/// query count Q that recovers n_target bits in at least
/// options.success_threshold of `trials` runs. Truths are uniform
/// n_target-bit fractions. Q is minimized over every register size that fits
/// the budget, so it is nonincreasing in F.
std::vector<TradeoffPoint> tradeoff_sweep(unsigned n_target, std::span<const std::uint64_t> F_values,
                                          std::uint64_t trials, Rng &rng,
                                          const TradeoffOptions &options = {});

}  // namespace qclock

#endif  // QCLOCK_QUERY_COMPLEXITY_HPP
