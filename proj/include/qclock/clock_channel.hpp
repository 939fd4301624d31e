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

#ifndef QCLOCK_CLOCK_CHANNEL_HPP
#define QCLOCK_CLOCK_CHANNEL_HPP

#include <cstdint>

#include "qclock/rng.hpp"
#include "qclock/statevector.hpp"

namespace qclock {

/// The hidden truth shared by both parties' clocks.
class ClockModel {
   public:
    /// Throws std::invalid_argument unless omega0 > 0 and both are finite.
    ClockModel(double offset_seconds, double omega0_hz);

    double offset() const { return offset_; }
    double omega0() const { return omega0_; }

    /// omega0 * T mod 1, in [0, 1). This is all a TQH query can reveal.
    double canonical_phase() const { return phase_; }

   private:
    double offset_;
    double omega0_;
    double phase_;
};

/// One ticking-qubit handshake: Alice's send time (her clock), Bob's receive
/// time (his clock), and the time the photon spent in flight. Extended
/// precision: t_bob sums three terms and its rounding error is multiplied by
/// 2 pi k omega0 in Bob's correction.
struct TransitRecord {
    long double t_alice = 0;
    long double t_bob = 0;
    long double t_transit = 0;
};

/// Throws std::invalid_argument unless t_transit >= 0 and
/// t_bob - t_alice - t_transit matches the clock offset to rounding error.
void check_transit(const ClockModel &clock, const TransitRecord &transit);

/// Queries consumed (Q) and the largest tick-rate multiplier used (F).
struct ResourceLedger {
    std::uint64_t queries = 0;
    std::uint64_t max_rate_index = 0;

    void record(std::uint64_t largest_rate) {
        ++queries;
        if (largest_rate > max_rate_index) {
            max_rate_index = largest_rate;
        }
    }

    ResourceLedger &operator+=(const ResourceLedger &other) {
        queries += other.queries;
        if (other.max_rate_index > max_rate_index) {
            max_rate_index = other.max_rate_index;
        }
        return *this;
    }
};

/// TQH(|k>|psi>) = |k> exp(2 pi i k omega0 T Z)|psi>, one ledgered query.
void tqh_oracle(const ClockModel &clock, StateVector &state, QubitRange reg, Qubit photon,
                ResourceLedger &ledger);

/// tqh_oracle with the rate register pinned to |k>.
void tqh_fixed_rate(const ClockModel &clock, StateVector &state, Qubit photon, std::uint64_t k,
                    ResourceLedger &ledger);

/// Realizes a fixed-rate query physically: the photon ticks at -k omega0 in
/// flight and Bob corrects with his own timestamp difference. `photon` must be
/// a one-qubit state.
StateVector handshake_simulate(const ClockModel &clock, std::uint64_t k,
                               const StateVector &photon, const TransitRecord &transit);

/// Draws transit times uniformly from [lo, hi] and stamps consistent records.
class TransitSampler {
   public:
    TransitSampler(ClockModel clock, Rng rng, double lo = 0.0, double hi = 10.0);

    TransitRecord next();

   private:
    ClockModel clock_;
    Rng rng_;
    double lo_;
    double hi_;
};

struct World {
    ClockModel clock;
    TransitSampler transit;
};

World make_world(double offset_seconds, double omega0_hz, Rng rng);

/// A way of executing TQH queries against a register and photon.
class TqhChannel {
   public:
    virtual ~TqhChannel() = default;
    virtual void query(StateVector &state, QubitRange reg, Qubit photon,
                       ResourceLedger &ledger) = 0;
    virtual double omega0() const = 0;
};

/// The black box itself.
class IdealChannel final : public TqhChannel {
   public:
    explicit IdealChannel(ClockModel clock) : clock_(clock) {}
    void query(StateVector &state, QubitRange reg, Qubit photon, ResourceLedger &ledger) override;
    double omega0() const override { return clock_.omega0(); }

   private:
    ClockModel clock_;
};

/// Every query sends one photon through a fresh transit drawn from the sampler.
class HandshakeChannel final : public TqhChannel {
   public:
    HandshakeChannel(ClockModel clock, TransitSampler &sampler)
        : clock_(clock), sampler_(&sampler) {}
    void query(StateVector &state, QubitRange reg, Qubit photon, ResourceLedger &ledger) override;
    double omega0() const override { return clock_.omega0(); }

   private:
    ClockModel clock_;
    TransitSampler *sampler_;
};

}  // namespace qclock

#endif  // QCLOCK_CLOCK_CHANNEL_HPP
