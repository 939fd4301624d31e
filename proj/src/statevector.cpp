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

#include "qclock/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qclock {

namespace {

void check_qubit(const StateVector &state, Qubit q) {
    if (q.index >= state.num_qubits()) {
        throw std::invalid_argument("qubit " + std::to_string(q.index) + " out of range for a " +
                                    std::to_string(state.num_qubits()) + "-qubit state");
    }
}

void check_range(const StateVector &state, QubitRange r) {
    if (r.end() > state.num_qubits() || r.end() < r.first) {
        throw std::invalid_argument("qubit range [" + std::to_string(r.first) + ", " +
                                    std::to_string(r.end()) + ") out of range for a " +
                                    std::to_string(state.num_qubits()) + "-qubit state");
    }
}

constexpr std::uint64_t bit(unsigned q) { return std::uint64_t{1} << q; }

constexpr std::uint64_t field(std::uint64_t i, QubitRange r) {
    return (i >> r.first) & (r.dimension() - 1);
}

}  // namespace

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index) {
    if (num_qubits == 0) {
        throw std::invalid_argument("a state needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("at most " + std::to_string(kMaxQubits) + " qubits supported");
    }
    if (index >= bit(num_qubits)) {
        throw std::invalid_argument("basis index " + std::to_string(index) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(bit(num_qubits));
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    const auto n = amps.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    unsigned q = 0;
    while ((std::size_t{1} << q) < n) {
        ++q;
    }
    if (q > kMaxQubits) {
        throw std::invalid_argument("at most " + std::to_string(kMaxQubits) + " qubits supported");
    }
    return StateVector(q, std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double max_deviation(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_deviation: state sizes differ");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

void hadamard(StateVector &state, Qubit target) {
    check_qubit(state, target);
    const double s = std::numbers::sqrt2 / 2;
    const auto m = bit(target.index);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & m) {
            continue;
        }
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | m];
        amps[i] = s * (a0 + a1);
        amps[i | m] = s * (a0 - a1);
    }
}

void z_phase(StateVector &state, Qubit target, double theta) {
    check_qubit(state, target);
    const Amplitude up = std::polar(1.0, theta);
    const Amplitude down = std::conj(up);
    const auto m = bit(target.index);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        amps[i] *= (i & m) ? down : up;
    }
}

void phase(StateVector &state, Qubit target, double theta) {
    check_qubit(state, target);
    const Amplitude w = std::polar(1.0, theta);
    const auto m = bit(target.index);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & m) {
            amps[i] *= w;
        }
    }
}

void controlled_phase(StateVector &state, Qubit control, Qubit target, double theta) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control.index == target.index) {
        throw std::invalid_argument("controlled_phase: control and target coincide");
    }
    const Amplitude w = std::polar(1.0, theta);
    const auto m = bit(control.index) | bit(target.index);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & m) == m) {
            amps[i] *= w;
        }
    }
}

void swap(StateVector &state, Qubit a, Qubit b) {
    check_qubit(state, a);
    check_qubit(state, b);
    if (a.index == b.index) {
        return;
    }
    const auto ma = bit(a.index);
    const auto mb = bit(b.index);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        // visit each |..1..0..> / |..0..1..> pair once
        if ((i & ma) && !(i & mb)) {
            std::swap(amps[i], amps[(i ^ ma) | mb]);
        }
    }
}

void indexed_phase(StateVector &state, QubitRange reg, Qubit photon,
                   const std::function<double(std::uint64_t)> &theta_of_k) {
    check_range(state, reg);
    check_qubit(state, photon);
    if (reg.contains(photon)) {
        throw std::invalid_argument("indexed_phase: photon qubit lies inside the register");
    }
    std::vector<Amplitude> up(reg.dimension());
    for (std::uint64_t k = 0; k < up.size(); ++k) {
        const double theta = theta_of_k(k);
        if (!std::isfinite(theta)) {
            throw std::invalid_argument("indexed_phase: non-finite phase");
        }
        up[k] = std::polar(1.0, theta);
    }
    const auto pm = bit(photon.index);
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const auto &w = up[field(i, reg)];
        amps[i] *= (i & pm) ? std::conj(w) : w;
    }
}

void register_phase(StateVector &state, QubitRange reg,
                    const std::function<double(std::uint64_t)> &theta_of_k) {
    check_range(state, reg);
    std::vector<Amplitude> w(reg.dimension());
    for (std::uint64_t k = 0; k < w.size(); ++k) {
        w[k] = std::polar(1.0, theta_of_k(k));
    }
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        amps[i] *= w[field(i, reg)];
    }
}

// Circuit: for the most significant qubit downward, H then phases controlled by
// every lower qubit; a final reversal puts output bits in LSB-first order.
void qft(StateVector &state, QubitRange reg) {
    check_range(state, reg);
    const double two_pi = 2 * std::numbers::pi;
    for (unsigned i = reg.count; i-- > 0;) {
        hadamard(state, Qubit{reg.first + i});
        for (unsigned l = 0; l < i; ++l) {
            controlled_phase(state, Qubit{reg.first + l}, Qubit{reg.first + i},
                             two_pi / static_cast<double>(bit(i - l + 1)));
        }
    }
    for (unsigned i = 0; i < reg.count / 2; ++i) {
        swap(state, Qubit{reg.first + i}, Qubit{reg.first + reg.count - 1 - i});
    }
}

void inverse_qft(StateVector &state, QubitRange reg) {
    check_range(state, reg);
    const double two_pi = 2 * std::numbers::pi;
    for (unsigned i = 0; i < reg.count / 2; ++i) {
        swap(state, Qubit{reg.first + i}, Qubit{reg.first + reg.count - 1 - i});
    }
    for (unsigned i = 0; i < reg.count; ++i) {
        for (unsigned l = i; l-- > 0;) {
            controlled_phase(state, Qubit{reg.first + l}, Qubit{reg.first + i},
                             -two_pi / static_cast<double>(bit(i - l + 1)));
        }
        hadamard(state, Qubit{reg.first + i});
    }
}

std::vector<double> marginal_probabilities(const StateVector &state, QubitRange qubits) {
    check_range(state, qubits);
    std::vector<double> probs(qubits.dimension(), 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        probs[field(i, qubits)] += std::norm(amps[i]);
    }
    return probs;
}

MeasurementOutcome measure(const StateVector &state, QubitRange qubits, Rng &rng) {
    if (qubits.count == 0) {
        throw std::invalid_argument("measure: empty qubit range");
    }
    const auto probs = marginal_probabilities(state, qubits);

    double total = 0;
    for (double p : probs) {
        total += p;
    }
    const double u = rng.uniform() * total;
    std::uint64_t value = 0;
    double cumulative = 0;
    std::uint64_t last_nonzero = 0;
    bool found = false;
    for (std::uint64_t v = 0; v < probs.size(); ++v) {
        if (probs[v] <= 0) {
            continue;
        }
        last_nonzero = v;
        cumulative += probs[v];
        if (u < cumulative) {
            value = v;
            found = true;
            break;
        }
    }
    if (!found) {
        value = last_nonzero;
    }

    const double scale = 1.0 / std::sqrt(probs[value]);
    const unsigned remaining = state.num_qubits() - qubits.count;
    if (remaining == 0) {
        return {value, StateVector::basis(state.num_qubits(), value)};
    }

    std::vector<Amplitude> kept(bit(remaining));
    const auto low_mask = bit(qubits.first) - 1;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (field(i, qubits) != value) {
            continue;
        }
        const auto j = (i & low_mask) | ((i >> qubits.end()) << qubits.first);
        kept[j] = amps[i] * scale;
    }
    return {value, StateVector::from_amplitudes(std::move(kept))};
}

}  // namespace qclock
