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

#ifndef QCLOCK_SYNC_PROTOCOL_HPP
#define QCLOCK_SYNC_PROTOCOL_HPP

#include <cstdint>
#include <optional>

#include "qclock/clock_channel.hpp"
#include "qclock/rng.hpp"
#include "qclock/statevector.hpp"

namespace qclock {

/// n + ceil(log2(2 + 1/(2 delta))). Throws unless 0 < delta < 1/2.
unsigned boosted_register_size(unsigned n_bits, double delta);

class ProtocolConfig {
   public:
    /// Throws std::invalid_argument for n_bits == 0, a delta outside (0, 1/2),
    /// or a register that would not fit in a StateVector.
    explicit ProtocolConfig(unsigned n_bits, std::optional<double> delta = std::nullopt);

    unsigned n_bits() const { return n_bits_; }
    std::optional<double> delta() const { return delta_; }
    /// Register size n' actually used; equals n_bits without delta.
    unsigned effective_register() const { return effective_; }

   private:
    unsigned n_bits_;
    std::optional<double> delta_;
    unsigned effective_;
};

struct SyncEstimate {
    /// Inverse-QFT register reading, before photon post-processing.
    std::uint64_t raw_m = 0;
    int photon_bit = 0;
    /// phase_hat * 2^n_bits.
    std::uint64_t phase_numerator = 0;
    double phase_hat = 0;
    double t_hat = 0;
    ResourceLedger ledger;
};

/// One run of the single-photon protocol through the ideal TQH black box.
SyncEstimate run_sync(const ProtocolConfig &config, const ClockModel &clock, Rng &rng);

/// Same protocol with queries executed by `channel`.
SyncEstimate run_sync(const ProtocolConfig &config, TqhChannel &channel, Rng &rng);

/// Joint register+photon state right after the TQH query (step 2): register
/// on qubits [0, n_prime), photon on qubit n_prime.
StateVector sync_state_after_query(unsigned n_prime, const ClockModel &clock);

/// Exact probability, summed over both photon outcomes, that the
/// post-processed estimate lands within circular distance < 2^-n_bits of
/// phi. No sampling. Throws unless phi in [0, 1) and 1 <= n_bits <= n_prime.
double success_probability_exact(unsigned n_prime, double phi, unsigned n_bits);

/// Circular distance on [0, 1).
double circular_distance(double a, double b);

/// Rounds value / 2^from_bits to the nearest multiple of 2^-to_bits and
/// returns the numerator mod 2^to_bits. Exact halves round down.
std::uint64_t round_to_bits(std::uint64_t value, unsigned from_bits, unsigned to_bits);

/// Undoes the conjugated |1> photon branch: m -> (2^bits - m) mod 2^bits.
std::uint64_t fold_photon_branch(std::uint64_t raw, int photon_bit, unsigned bits);

struct PhaseReading {
    std::uint64_t raw = 0;
    int photon_bit = 0;
    /// raw after fold_photon_branch; estimates frac(repetitions * phase) - shift.
    std::uint64_t folded = 0;
};

/// The protocol core on a `register_bits` register: `repetitions` consecutive
/// queries (one rate-k query simulated by R rate-k queries when R > 1) and an
/// optional register phase shift of `shift_cycles` applied after the photon is
/// read. Every query is ledgered.
PhaseReading read_phase(unsigned register_bits, TqhChannel &channel, Rng &rng,
                        ResourceLedger &ledger, std::uint64_t repetitions = 1,
                        double shift_cycles = 0.0);

}  // namespace qclock

#endif  // QCLOCK_SYNC_PROTOCOL_HPP
