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

#ifndef QCLOCK_STATEVECTOR_HPP
#define QCLOCK_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qclock/rng.hpp"

namespace qclock {

using Amplitude = std::complex<double>;

/// Index of a qubit inside a StateVector. Qubit 0 is the least significant
/// bit of the basis index.
struct Qubit {
    unsigned index = 0;
};

/// Contiguous run of qubits [first, first + count). Register qubit `first`
/// holds the least significant bit of the register value.
struct QubitRange {
    unsigned first = 0;
    unsigned count = 0;

    constexpr unsigned end() const { return first + count; }
    constexpr bool contains(Qubit q) const { return q.index >= first && q.index < end(); }
    constexpr std::uint64_t dimension() const { return std::uint64_t{1} << count; }
};

/// Dense statevector over 2^num_qubits basis states.
class StateVector {
   public:
    static constexpr unsigned kMaxQubits = 24;

    /// |index> on `num_qubits` qubits. Throws std::invalid_argument for
    /// num_qubits == 0, num_qubits > kMaxQubits, or index >= 2^num_qubits.
    static StateVector basis(unsigned num_qubits, std::uint64_t index);

    /// Takes ownership of `amps`; length must be a power of two >= 2.
    /// Amplitudes are used as given (no renormalization).
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }

    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }

    const Amplitude &operator[](std::uint64_t i) const { return amps_[i]; }
    Amplitude &operator[](std::uint64_t i) { return amps_[i]; }

    double norm_squared() const;

   private:
    StateVector(unsigned num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    unsigned num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Largest |a_i - b_i| over all amplitudes. Throws if the sizes differ.
double max_deviation(const StateVector &a, const StateVector &b);

// Gates act in place. Every gate validates its qubit arguments and throws
// std::invalid_argument on a bad index or overlapping ranges.

void hadamard(StateVector &state, Qubit target);

/// exp(i theta Z) = diag(e^{i theta}, e^{-i theta}) on `target`.
void z_phase(StateVector &state, Qubit target, double theta);

/// diag(1, e^{i theta}) on `target`.
void phase(StateVector &state, Qubit target, double theta);

/// diag(1, 1, 1, e^{i theta}) on (control, target).
void controlled_phase(StateVector &state, Qubit control, Qubit target, double theta);

void swap(StateVector &state, Qubit a, Qubit b);

/// Applies exp(i theta_of_k(k) Z) to `photon` for each value k of `reg`.
/// An empty register always reads k = 0.
void indexed_phase(StateVector &state, QubitRange reg, Qubit photon,
                   const std::function<double(std::uint64_t)> &theta_of_k);

/// Multiplies each component with register value k by e^{i theta_of_k(k)}.
void register_phase(StateVector &state, QubitRange reg,
                    const std::function<double(std::uint64_t)> &theta_of_k);

/// |k> -> 2^{-n/2} sum_j e^{+2 pi i j k / 2^n} |j> on `reg`.
void qft(StateVector &state, QubitRange reg);

/// Exact adjoint of qft.
void inverse_qft(StateVector &state, QubitRange reg);

/// Born probabilities of the values of `qubits`, indexed by register value.
std::vector<double> marginal_probabilities(const StateVector &state, QubitRange qubits);

struct MeasurementOutcome {
    std::uint64_t value;
    /// Remaining qubits in their original order, renormalized. When every
    /// qubit was measured this is the full register collapsed to |value>.
    StateVector collapsed;
};

/// Projective measurement of `qubits`; the measured qubits are removed from
/// the collapsed state unless they were all of them.
MeasurementOutcome measure(const StateVector &state, QubitRange qubits, Rng &rng);

}  // namespace qclock

#endif  // QCLOCK_STATEVECTOR_HPP
