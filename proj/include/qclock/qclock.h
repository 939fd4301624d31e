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

/*
 * qclock C API.
 *
 * Every function returns a qclock_status. On failure, qclock_last_error()
 * describes the most recent error on the calling thread. Handles are opaque
 * and owned by the caller; release them with the matching *_destroy.
 * Qubit 0 is the least significant bit of a basis index.
 */
#ifndef QCLOCK_QCLOCK_H
#define QCLOCK_QCLOCK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QCLOCK_BUILDING)
#    define QCLOCK_API __declspec(dllexport)
#  else
#    define QCLOCK_API __declspec(dllimport)
#  endif
#else
#  define QCLOCK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qclock_status {
    QCLOCK_OK = 0,
    QCLOCK_ERR_INVALID_ARGUMENT = 1,
    QCLOCK_ERR_USAGE = 2,
    QCLOCK_ERR_IO = 3,
    QCLOCK_ERR_NULL = 4,
    QCLOCK_ERR_BUFFER_TOO_SMALL = 5,
    QCLOCK_ERR_INTERNAL = 6
} qclock_status;

typedef struct qclock_state qclock_state;
typedef struct qclock_spec qclock_spec;

typedef struct qclock_clock {
    double offset_t; /* seconds */
    double omega0;   /* Hz, > 0 */
} qclock_clock;

typedef struct qclock_ledger {
    uint64_t queries;
    uint64_t max_rate_index;
} qclock_ledger;

typedef struct qclock_transit {
    double t_alice;
    double t_bob;
    double t_transit;
} qclock_transit;

typedef struct qclock_sync_estimate {
    uint64_t raw_m;
    int photon_bit;
    uint64_t phase_numerator;
    double phase_hat;
    double t_hat;
    qclock_ledger ledger;
} qclock_sync_estimate;

typedef struct qclock_tradeoff_point {
    uint64_t F;
    uint64_t Q;
    unsigned n_bits_achieved;
    double success_rate;
} qclock_tradeoff_point;

QCLOCK_API const char *qclock_version(void);
QCLOCK_API const char *qclock_last_error(void);

/* Statevector simulator */
QCLOCK_API qclock_status qclock_state_create(unsigned num_qubits, uint64_t index, qclock_state **out);
QCLOCK_API qclock_status qclock_state_clone(const qclock_state *state, qclock_state **out);
QCLOCK_API void qclock_state_destroy(qclock_state *state);
QCLOCK_API qclock_status qclock_state_num_qubits(const qclock_state *state, unsigned *out);
/* Copies 2^num_qubits amplitudes into re[] and im[] (each of length `len`). */
QCLOCK_API qclock_status qclock_state_amplitudes(const qclock_state *state, double *re, double *im, size_t len);
QCLOCK_API qclock_status qclock_hadamard(qclock_state *state, unsigned target);
QCLOCK_API qclock_status qclock_z_phase(qclock_state *state, unsigned target, double theta);
QCLOCK_API qclock_status qclock_qft(qclock_state *state, unsigned first, unsigned count);
QCLOCK_API qclock_status qclock_inverse_qft(qclock_state *state, unsigned first, unsigned count);
/* Measures [first, first+count); `state` is replaced by the collapsed state. */
QCLOCK_API qclock_status qclock_measure(qclock_state *state, unsigned first, unsigned count, uint64_t seed, uint64_t *value);

/* Clock channel */
QCLOCK_API qclock_status qclock_tqh_oracle(qclock_clock clock, qclock_state *state, unsigned reg_first, unsigned reg_count, unsigned photon, qclock_ledger *ledger);
QCLOCK_API qclock_status qclock_handshake_simulate(qclock_clock clock, uint64_t k, qclock_state *photon, qclock_transit transit);

/* Synchronization protocol. delta <= 0 means no boosting. */
QCLOCK_API qclock_status qclock_run_sync(unsigned n_bits, double delta, qclock_clock clock, uint64_t seed, qclock_sync_estimate *out);
QCLOCK_API qclock_status qclock_success_probability_exact(unsigned n_prime, double phi, unsigned n_bits, double *out);
QCLOCK_API qclock_status qclock_boosted_register_size(unsigned n_bits, double delta, unsigned *out);

/* Query complexity */
QCLOCK_API qclock_status qclock_single_rate_probabilities(qclock_clock clock, double *p0, double *p1);
QCLOCK_API qclock_status qclock_classical_estimate(qclock_clock clock, uint64_t samples, uint64_t seed, double *phase_hat, qclock_ledger *ledger);
QCLOCK_API qclock_status qclock_simulate_rate_k(qclock_clock clock, uint64_t k, qclock_state *state, unsigned photon, qclock_ledger *ledger);
QCLOCK_API qclock_status qclock_nayak_wu_bound(uint64_t N, uint64_t t, double delta, double *out);
/* Fills out[0..count) for the budgets F[0..count). */
QCLOCK_API qclock_status qclock_tradeoff_sweep(unsigned n_target, const uint64_t *F, size_t count, uint64_t trials, uint64_t seed, qclock_tradeoff_point *out);

/* Experiment harness */
QCLOCK_API qclock_status qclock_spec_create(qclock_spec **out);
QCLOCK_API void qclock_spec_destroy(qclock_spec *spec);
QCLOCK_API qclock_status qclock_spec_set(qclock_spec *spec, const char *key, const char *value);
QCLOCK_API qclock_status qclock_spec_load_file(qclock_spec *spec, const char *path);
/* argv excludes the program name. Replaces the spec's contents. */
QCLOCK_API qclock_status qclock_spec_parse_args(qclock_spec *spec, int argc, const char *const *argv);
QCLOCK_API qclock_status qclock_spec_validate(const qclock_spec *spec);
/* Runs the scenario and writes the CSV. The summary line is copied into
 * `summary` (NUL-terminated, truncated to `len`); `summary` may be NULL. */
QCLOCK_API qclock_status qclock_run(const qclock_spec *spec, char *summary, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* QCLOCK_QCLOCK_H */
