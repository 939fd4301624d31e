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

#include "qclock/sync_protocol.hpp"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace qclock {

unsigned boosted_register_size(unsigned n_bits, double delta) {
    if (!(delta > 0 && delta < 0.5)) {
        throw std::invalid_argument("delta must lie in (0, 1/2)");
    }
    return n_bits + static_cast<unsigned>(std::ceil(std::log2(2.0 + 1.0 / (2.0 * delta))));
}

ProtocolConfig::ProtocolConfig(unsigned n_bits, std::optional<double> delta)
    : n_bits_(n_bits), delta_(delta) {
    if (n_bits == 0) {
        throw std::invalid_argument("n_bits must be at least 1");
    }
    effective_ = delta ? boosted_register_size(n_bits, *delta) : n_bits;
    if (effective_ + 1 > StateVector::kMaxQubits) {
        throw std::invalid_argument("register of " + std::to_string(effective_) +
                                    " qubits is too large to simulate");
    }
}

double circular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 1.0);
    return std::min(d, 1.0 - d);
}

std::uint64_t round_to_bits(std::uint64_t value, unsigned from_bits, unsigned to_bits) {
    if (to_bits > from_bits) {
        throw std::invalid_argument("round_to_bits: cannot add precision");
    }
    const unsigned drop = from_bits - to_bits;
    const std::uint64_t mask = (std::uint64_t{1} << to_bits) - 1;
    if (drop == 0) {
        return value & mask;
    }
    const std::uint64_t half = std::uint64_t{1} << (drop - 1);
    const std::uint64_t rest = value & ((std::uint64_t{1} << drop) - 1);
    std::uint64_t q = value >> drop;
    if (rest > half) {
        ++q;
    }
    return q & mask;
}

std::uint64_t fold_photon_branch(std::uint64_t raw, int photon_bit, unsigned bits) {
    const std::uint64_t dim = std::uint64_t{1} << bits;
    return photon_bit == 0 ? raw : (dim - raw) & (dim - 1);
}

StateVector sync_state_after_query(unsigned n_prime, const ClockModel &clock) {
    const QubitRange reg{0, n_prime};
    const Qubit photon{n_prime};
    StateVector state = StateVector::basis(n_prime + 1, 0);
    qft(state, reg);
    hadamard(state, photon);
    ResourceLedger scratch;
    tqh_oracle(clock, state, reg, photon, scratch);
    return state;
}

double success_probability_exact(unsigned n_prime, double phi, unsigned n_bits) {
    if (!(phi >= 0 && phi < 1)) {
        throw std::invalid_argument("phi must lie in [0, 1)");
    }
    if (n_bits == 0 || n_bits > n_prime) {
        throw std::invalid_argument("need 1 <= n_bits <= n_prime");
    }
    StateVector state = sync_state_after_query(n_prime, ClockModel(phi, 1.0));
    // The photon readout and the register's inverse QFT act on disjoint
    // qubits, so the final joint distribution can be read in one pass.
    inverse_qft(state, QubitRange{0, n_prime});
    const auto joint = marginal_probabilities(state, QubitRange{0, n_prime + 1});

    const std::uint64_t dim = std::uint64_t{1} << n_prime;
    const double tolerance = std::ldexp(1.0, -static_cast<int>(n_bits));
    double accepted = 0;
    for (std::uint64_t idx = 0; idx < joint.size(); ++idx) {
        const std::uint64_t raw = idx & (dim - 1);
        const int photon_bit = static_cast<int>(idx >> n_prime);
        const auto numerator = round_to_bits(fold_photon_branch(raw, photon_bit, n_prime), n_prime,
                                             n_bits);
        const double estimate = std::ldexp(static_cast<double>(numerator), -static_cast<int>(n_bits));
        if (circular_distance(estimate, phi) < tolerance) {
            accepted += joint[idx];
        }
    }
    return accepted;
}

PhaseReading read_phase(unsigned register_bits, TqhChannel &channel, Rng &rng,
                        ResourceLedger &ledger, std::uint64_t repetitions, double shift_cycles) {
    if (register_bits == 0) {
        throw std::invalid_argument("register must hold at least one qubit");
    }
    if (repetitions == 0) {
        throw std::invalid_argument("need at least one query");
    }
    const QubitRange reg{0, register_bits};
    const Qubit photon{register_bits};

    // Step 1: uniform rate superposition and a diagonal photon.
    StateVector state = StateVector::basis(register_bits + 1, 0);
    qft(state, reg);
    hadamard(state, photon);

    // Step 2: the photon goes out with the register's tick rates.
    for (std::uint64_t r = 0; r < repetitions; ++r) {
        channel.query(state, reg, photon, ledger);
    }

    // Step 3: Bob reads the photon; it leaves the computation.
    auto photon_readout = measure(state, QubitRange{photon.index, 1}, rng);
    const int photon_bit = static_cast<int>(photon_readout.value);
    StateVector reg_state = std::move(photon_readout.collapsed);

    if (shift_cycles != 0.0) {
        // the |1> branch carries conjugate phases, so it shifts the other way
        const double sign = photon_bit == 0 ? -1.0 : 1.0;
        const double two_pi = 2 * std::numbers::pi;
        register_phase(reg_state, reg, [&](std::uint64_t k) {
            return sign * two_pi * std::fmod(static_cast<double>(k) * shift_cycles, 1.0);
        });
    }

    // Step 4: inverse QFT and read the register.
    inverse_qft(reg_state, reg);
    const auto reading = measure(reg_state, reg, rng);

    PhaseReading out;
    out.raw = reading.value;
    out.photon_bit = photon_bit;
    out.folded = fold_photon_branch(reading.value, photon_bit, register_bits);
    return out;
}

SyncEstimate run_sync(const ProtocolConfig &config, TqhChannel &channel, Rng &rng) {
    SyncEstimate est;
    const unsigned n_prime = config.effective_register();
    const PhaseReading reading = read_phase(n_prime, channel, rng, est.ledger);
    est.raw_m = reading.raw;
    est.photon_bit = reading.photon_bit;
    est.phase_numerator = round_to_bits(reading.folded, n_prime, config.n_bits());
    est.phase_hat =
        std::ldexp(static_cast<double>(est.phase_numerator), -static_cast<int>(config.n_bits()));
    est.t_hat = est.phase_hat / channel.omega0();
    return est;
}

SyncEstimate run_sync(const ProtocolConfig &config, const ClockModel &clock, Rng &rng) {
    IdealChannel channel(clock);
    return run_sync(config, channel, rng);
}

}  // namespace qclock
