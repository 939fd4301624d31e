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

#include "qclock/clock_channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qclock {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// 2 pi * frac(k * cycles), reduced before scaling so large k keeps precision.
double wrapped_angle(std::uint64_t k, long double cycles) {
    long double turns = std::fmod(static_cast<long double>(k) * cycles, 1.0L);
    if (turns < 0) {
        turns += 1.0L;
    }
    return kTwoPi * static_cast<double>(turns);
}

std::uint64_t register_max_rate(QubitRange reg) { return reg.dimension() - 1; }

// Alice's in-flight ticking followed by Bob's timestamp correction.
void apply_handshake(const ClockModel &clock, StateVector &state, QubitRange reg, Qubit photon,
                     const TransitRecord &transit) {
    const long double w = clock.omega0();
    const long double in_flight = w * transit.t_transit;
    const long double elapsed =
        w * (transit.t_bob - transit.t_alice);
    indexed_phase(state, reg, photon, [&](std::uint64_t k) { return -wrapped_angle(k, in_flight); });
    indexed_phase(state, reg, photon, [&](std::uint64_t k) { return wrapped_angle(k, elapsed); });
}

}  // namespace

ClockModel::ClockModel(double offset_seconds, double omega0_hz)
    : offset_(offset_seconds), omega0_(omega0_hz) {
    if (!std::isfinite(offset_seconds)) {
        throw std::invalid_argument("clock offset must be finite");
    }
    if (!(omega0_hz > 0) || !std::isfinite(omega0_hz)) {
        throw std::invalid_argument("omega0 must be a positive finite rate");
    }
    double p = std::fmod(omega0_hz * offset_seconds, 1.0);
    if (p < 0) {
        p += 1.0;
    }
    // fmod of a tiny negative can round up to exactly 1
    phase_ = p >= 1.0 ? 0.0 : p;
}

void check_transit(const ClockModel &clock, const TransitRecord &transit) {
    if (!(transit.t_transit >= 0) || !std::isfinite(transit.t_alice) ||
        !std::isfinite(transit.t_bob) || !std::isfinite(transit.t_transit)) {
        throw std::invalid_argument("transit record must be finite with t_transit >= 0");
    }
    const long double implied = transit.t_bob - transit.t_alice - transit.t_transit;
    const long double scale = 1.0L + std::abs(transit.t_alice) + std::abs(transit.t_bob) +
                              transit.t_transit + std::abs(static_cast<long double>(clock.offset()));
    if (std::abs(implied - clock.offset()) > 1e-12L * scale) {
        throw std::invalid_argument("transit record inconsistent with the clock offset");
    }
}

void tqh_oracle(const ClockModel &clock, StateVector &state, QubitRange reg, Qubit photon,
                ResourceLedger &ledger) {
    const long double phi = clock.canonical_phase();
    indexed_phase(state, reg, photon, [phi](std::uint64_t k) { return wrapped_angle(k, phi); });
    ledger.record(register_max_rate(reg));
}

void tqh_fixed_rate(const ClockModel &clock, StateVector &state, Qubit photon, std::uint64_t k,
                    ResourceLedger &ledger) {
    z_phase(state, photon, wrapped_angle(k, clock.canonical_phase()));
    ledger.record(k);
}

StateVector handshake_simulate(const ClockModel &clock, std::uint64_t k,
                               const StateVector &photon, const TransitRecord &transit) {
    if (photon.num_qubits() != 1) {
        throw std::invalid_argument("handshake_simulate expects a one-qubit photon state");
    }
    check_transit(clock, transit);
    StateVector out = photon;
    const long double w = clock.omega0();
    const long double in_flight = w * transit.t_transit;
    const long double elapsed =
        w * (transit.t_bob - transit.t_alice);
    z_phase(out, Qubit{0}, -wrapped_angle(k, in_flight));
    z_phase(out, Qubit{0}, wrapped_angle(k, elapsed));
    return out;
}

TransitSampler::TransitSampler(ClockModel clock, Rng rng, double lo, double hi)
    : clock_(clock), rng_(rng), lo_(lo), hi_(hi) {
    if (!(lo >= 0) || !(hi >= lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("transit interval must satisfy 0 <= lo <= hi");
    }
}

TransitRecord TransitSampler::next() {
    TransitRecord r;
    r.t_alice = rng_.uniform();
    r.t_transit = rng_.uniform(lo_, hi_);
    r.t_bob = r.t_alice + r.t_transit + static_cast<long double>(clock_.offset());
    return r;
}

World make_world(double offset_seconds, double omega0_hz, Rng rng) {
    ClockModel clock(offset_seconds, omega0_hz);
    return World{clock, TransitSampler(clock, rng)};
}

void IdealChannel::query(StateVector &state, QubitRange reg, Qubit photon,
                         ResourceLedger &ledger) {
    tqh_oracle(clock_, state, reg, photon, ledger);
}

void HandshakeChannel::query(StateVector &state, QubitRange reg, Qubit photon,
                             ResourceLedger &ledger) {
    const TransitRecord transit = sampler_->next();
    check_transit(clock_, transit);
    apply_handshake(clock_, state, reg, photon, transit);
    ledger.record(register_max_rate(reg));
}

}  // namespace qclock
