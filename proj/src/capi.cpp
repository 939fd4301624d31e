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

#include "qclock/qclock.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qclock/clock_channel.hpp"
#include "qclock/harness.hpp"
#include "qclock/query_complexity.hpp"
#include "qclock/statevector.hpp"
#include "qclock/sync_protocol.hpp"

struct qclock_state {
    qclock::StateVector value;
};

struct qclock_spec {
    qclock::harness::ExperimentSpec value;
};

namespace {

thread_local std::string g_last_error;

qclock_status fail(qclock_status code, const char *message) {
    g_last_error = message;
    return code;
}

template <typename F>
qclock_status guarded(F &&body) {
    try {
        body();
        g_last_error.clear();
        return QCLOCK_OK;
    } catch (const qclock::harness::UsageError &e) {
        return fail(QCLOCK_ERR_USAGE, e.what());
    } catch (const qclock::harness::IoError &e) {
        return fail(QCLOCK_ERR_IO, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(QCLOCK_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(QCLOCK_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(QCLOCK_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QCLOCK_ERR_INTERNAL, "unknown error");
    }
}

qclock::ClockModel to_clock(qclock_clock c) { return qclock::ClockModel(c.offset_t, c.omega0); }

qclock::ResourceLedger to_ledger(const qclock_ledger *l) {
    return l ? qclock::ResourceLedger{l->queries, l->max_rate_index} : qclock::ResourceLedger{};
}

void store_ledger(const qclock::ResourceLedger &from, qclock_ledger *to) {
    if (to) {
        to->queries = from.queries;
        to->max_rate_index = from.max_rate_index;
    }
}

}  // namespace

#define QCLOCK_REQUIRE(ptr) \
    if (!(ptr)) return fail(QCLOCK_ERR_NULL, #ptr " must not be NULL")

extern "C" {

const char *qclock_version(void) {
    static const std::string version(qclock::harness::kVersion);
    return version.c_str();
}

const char *qclock_last_error(void) { return g_last_error.c_str(); }

qclock_status qclock_state_create(unsigned num_qubits, uint64_t index, qclock_state **out) {
    QCLOCK_REQUIRE(out);
    return guarded([&] { *out = new qclock_state{qclock::StateVector::basis(num_qubits, index)}; });
}

qclock_status qclock_state_clone(const qclock_state *state, qclock_state **out) {
    QCLOCK_REQUIRE(state);
    QCLOCK_REQUIRE(out);
    return guarded([&] { *out = new qclock_state{state->value}; });
}

void qclock_state_destroy(qclock_state *state) { delete state; }

qclock_status qclock_state_num_qubits(const qclock_state *state, unsigned *out) {
    QCLOCK_REQUIRE(state);
    QCLOCK_REQUIRE(out);
    *out = state->value.num_qubits();
    return QCLOCK_OK;
}

qclock_status qclock_state_amplitudes(const qclock_state *state, double *re, double *im, size_t len) {
    QCLOCK_REQUIRE(state);
    QCLOCK_REQUIRE(re);
    QCLOCK_REQUIRE(im);
    const auto amps = state->value.amplitudes();
    if (len < amps.size()) {
        return fail(QCLOCK_ERR_BUFFER_TOO_SMALL, "amplitude buffers shorter than 2^num_qubits");
    }
    for (std::size_t i = 0; i < amps.size(); ++i) {
        re[i] = amps[i].real();
        im[i] = amps[i].imag();
    }
    return QCLOCK_OK;
}

qclock_status qclock_hadamard(qclock_state *state, unsigned target) {
    QCLOCK_REQUIRE(state);
    return guarded([&] { qclock::hadamard(state->value, qclock::Qubit{target}); });
}

qclock_status qclock_z_phase(qclock_state *state, unsigned target, double theta) {
    QCLOCK_REQUIRE(state);
    return guarded([&] { qclock::z_phase(state->value, qclock::Qubit{target}, theta); });
}

qclock_status qclock_qft(qclock_state *state, unsigned first, unsigned count) {
    QCLOCK_REQUIRE(state);
    return guarded([&] { qclock::qft(state->value, qclock::QubitRange{first, count}); });
}

qclock_status qclock_inverse_qft(qclock_state *state, unsigned first, unsigned count) {
    QCLOCK_REQUIRE(state);
    return guarded([&] { qclock::inverse_qft(state->value, qclock::QubitRange{first, count}); });
}

qclock_status qclock_measure(qclock_state *state, unsigned first, unsigned count, uint64_t seed,
                             uint64_t *value) {
    QCLOCK_REQUIRE(state);
    QCLOCK_REQUIRE(value);
    return guarded([&] {
        qclock::Rng rng(seed);
        auto outcome = qclock::measure(state->value, qclock::QubitRange{first, count}, rng);
        *value = outcome.value;
        state->value = std::move(outcome.collapsed);
    });
}

qclock_status qclock_tqh_oracle(qclock_clock clock, qclock_state *state, unsigned reg_first,
                                unsigned reg_count, unsigned photon, qclock_ledger *ledger) {
    QCLOCK_REQUIRE(state);
    return guarded([&] {
        auto l = to_ledger(ledger);
        qclock::tqh_oracle(to_clock(clock), state->value, qclock::QubitRange{reg_first, reg_count},
                           qclock::Qubit{photon}, l);
        store_ledger(l, ledger);
    });
}

qclock_status qclock_handshake_simulate(qclock_clock clock, uint64_t k, qclock_state *photon,
                                        qclock_transit transit) {
    QCLOCK_REQUIRE(photon);
    return guarded([&] {
        photon->value = qclock::handshake_simulate(
            to_clock(clock), k, photon->value,
            qclock::TransitRecord{transit.t_alice, transit.t_bob, transit.t_transit});
    });
}

qclock_status qclock_run_sync(unsigned n_bits, double delta, qclock_clock clock, uint64_t seed,
                              qclock_sync_estimate *out) {
    QCLOCK_REQUIRE(out);
    return guarded([&] {
        const qclock::ProtocolConfig config(
            n_bits, delta > 0 ? std::optional<double>(delta) : std::nullopt);
        qclock::Rng rng(seed);
        const auto est = qclock::run_sync(config, to_clock(clock), rng);
        out->raw_m = est.raw_m;
        out->photon_bit = est.photon_bit;
        out->phase_numerator = est.phase_numerator;
        out->phase_hat = est.phase_hat;
        out->t_hat = est.t_hat;
        store_ledger(est.ledger, &out->ledger);
    });
}

qclock_status qclock_success_probability_exact(unsigned n_prime, double phi, unsigned n_bits,
                                               double *out) {
    QCLOCK_REQUIRE(out);
    return guarded([&] { *out = qclock::success_probability_exact(n_prime, phi, n_bits); });
}

qclock_status qclock_boosted_register_size(unsigned n_bits, double delta, unsigned *out) {
    QCLOCK_REQUIRE(out);
    return guarded([&] { *out = qclock::boosted_register_size(n_bits, delta); });
}

qclock_status qclock_single_rate_probabilities(qclock_clock clock, double *p0, double *p1) {
    QCLOCK_REQUIRE(p0);
    QCLOCK_REQUIRE(p1);
    return guarded([&] {
        const auto probs = qclock::marginal_probabilities(qclock::single_rate_state(to_clock(clock)),
                                                          qclock::QubitRange{0, 1});
        *p0 = probs[0];
        *p1 = probs[1];
    });
}

qclock_status qclock_classical_estimate(qclock_clock clock, uint64_t samples, uint64_t seed,
                                        double *phase_hat, qclock_ledger *ledger) {
    QCLOCK_REQUIRE(phase_hat);
    return guarded([&] {
        qclock::Rng rng(seed);
        const auto est = qclock::classical_estimate(to_clock(clock), samples, rng);
        *phase_hat = est.phase_hat;
        store_ledger(est.ledger, ledger);
    });
}

qclock_status qclock_simulate_rate_k(qclock_clock clock, uint64_t k, qclock_state *state,
                                     unsigned photon, qclock_ledger *ledger) {
    QCLOCK_REQUIRE(state);
    return guarded([&] {
        auto l = to_ledger(ledger);
        qclock::simulate_rate_k_with_unit_rate(to_clock(clock), k, state->value,
                                               qclock::Qubit{photon}, l);
        store_ledger(l, ledger);
    });
}

qclock_status qclock_nayak_wu_bound(uint64_t N, uint64_t t, double delta, double *out) {
    QCLOCK_REQUIRE(out);
    return guarded([&] { *out = qclock::nayak_wu_bound(qclock::LowerBoundParams{N, t, delta}); });
}

qclock_status qclock_tradeoff_sweep(unsigned n_target, const uint64_t *F, size_t count,
                                    uint64_t trials, uint64_t seed, qclock_tradeoff_point *out) {
    QCLOCK_REQUIRE(F);
    QCLOCK_REQUIRE(out);
    return guarded([&] {
        qclock::Rng rng(seed);
        const auto points =
            qclock::tradeoff_sweep(n_target, std::span<const std::uint64_t>(F, count), trials, rng);
        for (std::size_t i = 0; i < points.size(); ++i) {
            out[i] = qclock_tradeoff_point{points[i].F, points[i].Q, points[i].n_bits_achieved,
                                           points[i].success_rate};
        }
    });
}

qclock_status qclock_spec_create(qclock_spec **out) {
    QCLOCK_REQUIRE(out);
    return guarded([&] { *out = new qclock_spec{}; });
}

void qclock_spec_destroy(qclock_spec *spec) { delete spec; }

qclock_status qclock_spec_set(qclock_spec *spec, const char *key, const char *value) {
    QCLOCK_REQUIRE(spec);
    QCLOCK_REQUIRE(key);
    QCLOCK_REQUIRE(value);
    return guarded([&] { qclock::harness::set_field(spec->value, key, value); });
}

qclock_status qclock_spec_load_file(qclock_spec *spec, const char *path) {
    QCLOCK_REQUIRE(spec);
    QCLOCK_REQUIRE(path);
    return guarded([&] { qclock::harness::load_config_file(spec->value, path); });
}

qclock_status qclock_spec_parse_args(qclock_spec *spec, int argc, const char *const *argv) {
    QCLOCK_REQUIRE(spec);
    if (argc > 0) {
        QCLOCK_REQUIRE(argv);
    }
    return guarded([&] {
        std::vector<std::string> args(argv, argv + (argc > 0 ? argc : 0));
        spec->value = qclock::harness::parse_config(args);
    });
}

qclock_status qclock_spec_validate(const qclock_spec *spec) {
    QCLOCK_REQUIRE(spec);
    return guarded([&] { qclock::harness::validate(spec->value); });
}

qclock_status qclock_run(const qclock_spec *spec, char *summary, size_t len) {
    QCLOCK_REQUIRE(spec);
    return guarded([&] {
        const std::string line = qclock::harness::run(spec->value);
        if (summary && len > 0) {
            const std::size_t n = std::min(len - 1, line.size());
            std::memcpy(summary, line.data(), n);
            summary[n] = '\0';
        }
    });
}

}  // extern "C"
