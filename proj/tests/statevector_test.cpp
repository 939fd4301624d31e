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

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace qclock;
using oracle::cd;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void expect_amps(const StateVector &s, std::initializer_list<cd> expected, double tol = 1e-12) {
    ASSERT_EQ(s.size(), expected.size());
    std::size_t i = 0;
    for (const cd &e : expected) {
        EXPECT_NEAR(std::abs(s[i] - e), 0.0, tol) << "amplitude " << i;
        ++i;
    }
}

}  // namespace

TEST(statevector, basis_state) {
    expect_amps(StateVector::basis(1, 0), {1, 0}, 0);
    expect_amps(StateVector::basis(2, 3), {0, 0, 0, 1}, 0);
    EXPECT_THROW(StateVector::basis(3, 8), std::invalid_argument);
    EXPECT_THROW(StateVector::basis(0, 0), std::invalid_argument);
    EXPECT_THROW(StateVector::basis(StateVector::kMaxQubits + 1, 0), std::invalid_argument);
}

TEST(statevector, from_amplitudes_rejects_bad_lengths) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_EQ(StateVector::from_amplitudes({1.0, 0.0, 0.0, 0.0}).num_qubits(), 2u);
}

TEST(hadamard, examples) {
    auto s = StateVector::basis(1, 0);
    hadamard(s, Qubit{0});
    expect_amps(s, {kInvSqrt2, kInvSqrt2});

    // (e^{i pi/3}|0> + e^{-i pi/3}|1>)/sqrt2 -> cos(pi/3)|0> + i sin(pi/3)|1>
    const double th = kPi / 3;
    auto t = StateVector::from_amplitudes(
        {std::polar(kInvSqrt2, th), std::polar(kInvSqrt2, -th)});
    hadamard(t, Qubit{0});
    expect_amps(t, {0.5, cd(0, std::sqrt(3.0) / 2)});

    EXPECT_THROW(hadamard(s, Qubit{1}), std::invalid_argument);
}

TEST(z_phase, examples) {
    auto plus = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2});

    auto a = plus;
    z_phase(a, Qubit{0}, 0.0);
    EXPECT_EQ(max_deviation(a, plus), 0.0);

    auto b = plus;
    z_phase(b, Qubit{0}, kPi);
    expect_amps(b, {-kInvSqrt2, -kInvSqrt2});

    auto c = plus;
    z_phase(c, Qubit{0}, kPi / 2);
    expect_amps(c, {cd(0, kInvSqrt2), cd(0, -kInvSqrt2)});

    EXPECT_THROW(z_phase(c, Qubit{3}, 1.0), std::invalid_argument);
}

TEST(indexed_phase, zero_phase_is_identity) {
    Rng rng(11);
    const auto s = oracle::random_state(4, rng);
    auto t = s;
    indexed_phase(t, QubitRange{0, 3}, Qubit{3}, [](std::uint64_t) { return 0.0; });
    EXPECT_EQ(max_deviation(s, t), 0.0);
}

TEST(indexed_phase, empty_register_reduces_to_z_phase) {
    Rng rng(12);
    const auto s = oracle::random_state(2, rng);
    auto a = s;
    auto b = s;
    indexed_phase(a, QubitRange{0, 0}, Qubit{1}, [](std::uint64_t k) { return 0.7 + k; });
    z_phase(b, Qubit{1}, 0.7);
    EXPECT_LE(max_deviation(a, b), 1e-12);
}

TEST(indexed_phase, uniform_register_enumeration) {
    // Register over Z_4 uniform, photon |+>, theta(k) = 2 pi k / 8.
    auto s = StateVector::basis(3, 0);
    hadamard(s, Qubit{0});
    hadamard(s, Qubit{1});
    hadamard(s, Qubit{2});
    indexed_phase(s, QubitRange{0, 2}, Qubit{2},
                  [](std::uint64_t k) { return 2 * kPi * static_cast<double>(k) / 8; });
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        const std::uint64_t k = idx & 3;
        const int sign = (idx >> 2) ? -1 : 1;
        const cd expected = std::polar(1 / std::sqrt(8.0), sign * 2 * kPi * static_cast<double>(k) / 8);
        EXPECT_LE(std::abs(s[idx] - expected), 1e-12) << idx;
    }
}

TEST(indexed_phase, constant_phase_matches_z_phase) {
    Rng rng(13);
    for (unsigned q = 2; q <= 8; ++q) {
        const auto s = oracle::random_state(q, rng);
        const double theta = rng.uniform(-10, 10);
        auto a = s;
        auto b = s;
        indexed_phase(a, QubitRange{1, q - 1}, Qubit{0}, [&](std::uint64_t) { return theta; });
        z_phase(b, Qubit{0}, theta);
        EXPECT_LE(max_deviation(a, b), 1e-12);
    }
}

TEST(indexed_phase, overlapping_photon_rejected) {
    auto s = StateVector::basis(3, 0);
    EXPECT_THROW(indexed_phase(s, QubitRange{0, 2}, Qubit{1}, [](std::uint64_t) { return 0.0; }),
                 std::invalid_argument);
    EXPECT_THROW(indexed_phase(s, QubitRange{1, 3}, Qubit{0}, [](std::uint64_t) { return 0.0; }),
                 std::invalid_argument);
}

TEST(qft, zero_goes_to_uniform) {
    auto s = StateVector::basis(3, 0);
    qft(s, QubitRange{0, 3});
    for (std::uint64_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(s[i] - cd(1 / std::sqrt(8.0), 0)), 0.0, 1e-12);
    }
}

TEST(qft, inverse_of_phase_ramp_is_basis_state) {
    std::vector<cd> amps(8);
    for (std::uint64_t k = 0; k < 8; ++k) {
        amps[k] = std::polar(1 / std::sqrt(8.0), 2 * kPi * static_cast<double>(k) * 5.0 / 8.0);
    }
    auto s = StateVector::from_amplitudes(amps);
    inverse_qft(s, QubitRange{0, 3});
    expect_amps(s, {0, 0, 0, 0, 0, 1, 0, 0});
}

TEST(qft, matches_dense_dft_on_subregisters) {
    Rng rng(21);
    for (unsigned q = 1; q <= 7; ++q) {
        for (unsigned first = 0; first < q; ++first) {
            for (unsigned count = 1; first + count <= q; ++count) {
                const auto s = oracle::random_state(q, rng);
                auto fwd = s;
                qft(fwd, QubitRange{first, count});
                EXPECT_LE(oracle::max_dev(oracle::to_vector(fwd),
                                          oracle::dense_dft(oracle::to_vector(s), first, count, +1)),
                          1e-12);
                auto inv = s;
                inverse_qft(inv, QubitRange{first, count});
                EXPECT_LE(oracle::max_dev(oracle::to_vector(inv),
                                          oracle::dense_dft(oracle::to_vector(s), first, count, -1)),
                          1e-12);
            }
        }
    }
}

TEST(qft, bad_range_rejected) {
    auto s = StateVector::basis(3, 0);
    EXPECT_THROW(qft(s, QubitRange{1, 3}), std::invalid_argument);
    EXPECT_THROW(inverse_qft(s, QubitRange{3, 1}), std::invalid_argument);
}

TEST(statevector_properties, round_trips_and_norm_on_random_states) {
    Rng rng(99);
    for (unsigned q = 1; q <= 10; ++q) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto s = oracle::random_state(q, rng);
            const unsigned target = static_cast<unsigned>(rng() % q);
            const double theta = rng.uniform(-20, 20);

            auto h = s;
            hadamard(h, Qubit{target});
            EXPECT_NEAR(h.norm_squared(), 1.0, 1e-9);
            hadamard(h, Qubit{target});
            EXPECT_LE(max_deviation(h, s), 1e-12);

            auto z = s;
            z_phase(z, Qubit{target}, theta);
            EXPECT_NEAR(z.norm_squared(), 1.0, 1e-9);
            z_phase(z, Qubit{target}, -theta);
            EXPECT_LE(max_deviation(z, s), 1e-12);

            const unsigned first = static_cast<unsigned>(rng() % q);
            const unsigned count = 1 + static_cast<unsigned>(rng() % (q - first));
            auto f = s;
            qft(f, QubitRange{first, count});
            EXPECT_NEAR(f.norm_squared(), 1.0, 1e-9);
            inverse_qft(f, QubitRange{first, count});
            EXPECT_LE(max_deviation(f, s), 1e-12);
        }
    }
}

TEST(measure, certain_outcome) {
    Rng rng(1);
    const auto out = measure(StateVector::basis(1, 0), QubitRange{0, 1}, rng);
    EXPECT_EQ(out.value, 0u);
    EXPECT_EQ(out.collapsed.num_qubits(), 1u);
    EXPECT_EQ(out.collapsed[0], cd(1, 0));
}

TEST(measure, empty_range_rejected) {
    Rng rng(1);
    EXPECT_THROW(measure(StateVector::basis(2, 0), QubitRange{0, 0}, rng), std::invalid_argument);
    EXPECT_THROW(measure(StateVector::basis(2, 0), QubitRange{1, 2}, rng), std::invalid_argument);
}

TEST(measure, same_seed_same_outcome) {
    Rng gen(5);
    const auto s = oracle::random_state(5, gen);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng a(seed), b(seed);
        const auto x = measure(s, QubitRange{1, 3}, a);
        const auto y = measure(s, QubitRange{1, 3}, b);
        EXPECT_EQ(x.value, y.value);
        EXPECT_EQ(max_deviation(x.collapsed, y.collapsed), 0.0);
    }
}

TEST(measure, collapse_removes_measured_qubits) {
    // |psi> = (|0>_a|0>_b|1>_c + |1>_a|1>_b|0>_c)/sqrt2 on qubits c=0, b=1, a=2
    std::vector<cd> amps(8);
    amps[0b001] = kInvSqrt2;
    amps[0b110] = kInvSqrt2;
    const auto s = StateVector::from_amplitudes(amps);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto out = measure(s, QubitRange{1, 1}, rng);
        ASSERT_EQ(out.collapsed.num_qubits(), 2u);
        EXPECT_NEAR(out.collapsed.norm_squared(), 1.0, 1e-9);
        // remaining qubits keep their order: new bit 0 = old c, new bit 1 = old a
        const std::uint64_t expected = out.value == 0 ? 0b01 : 0b10;
        EXPECT_NEAR(std::abs(out.collapsed[expected]), 1.0, 1e-12);
    }
}

TEST(measure, photon_of_joint_state_is_fair) {
    // Register n=3 uniform, photon |+>, photon phases e^{+-2 pi i k phi}.
    auto s = StateVector::basis(4, 0);
    qft(s, QubitRange{0, 3});
    hadamard(s, Qubit{3});
    indexed_phase(s, QubitRange{0, 3}, Qubit{3},
                  [](std::uint64_t k) { return 2 * kPi * static_cast<double>(k) * 0.3141; });
    const auto p = marginal_probabilities(s, QubitRange{3, 1});
    EXPECT_NEAR(p[0], 0.5, 1e-12);
    EXPECT_NEAR(p[1], 0.5, 1e-12);
}

TEST(measure, born_frequencies_within_four_sigma) {
    Rng gen(77);
    const auto s = oracle::random_state(3, gen);
    const auto probs = marginal_probabilities(s, QubitRange{0, 3});
    constexpr int kTrials = 100000;
    std::vector<int> counts(8, 0);
    Rng rng(123);
    for (int i = 0; i < kTrials; ++i) {
        ++counts[measure(s, QubitRange{0, 3}, rng).value];
    }
    for (std::size_t v = 0; v < 8; ++v) {
        const double sigma = std::sqrt(kTrials * probs[v] * (1 - probs[v]));
        EXPECT_LE(std::abs(counts[v] - kTrials * probs[v]), 4 * sigma) << "outcome " << v;
    }
}
