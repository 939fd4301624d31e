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

#include "qclock/query_complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qclock/sync_protocol.hpp"

namespace qclock {

namespace {

constexpr double kPi = std::numbers::pi;

// Photon prepared diagonally, one rate-1 query, an optional extra Z-phase,
// then the Hadamard that turns relative phase into population.
StateVector probe_state(const ClockModel &clock, double extra_theta, ResourceLedger &ledger) {
    StateVector s = StateVector::basis(1, 0);
    hadamard(s, Qubit{0});
    tqh_fixed_rate(clock, s, Qubit{0}, 1, ledger);
    if (extra_theta != 0.0) {
        z_phase(s, Qubit{0}, extra_theta);
    }
    hadamard(s, Qubit{0});
    return s;
}

std::uint64_t count_zeros(const StateVector &prepared, std::uint64_t samples, Rng &rng) {
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (measure(prepared, QubitRange{0, 1}, rng).value == 0) {
            ++zeros;
        }
    }
    return zeros;
}

// Exponents j of the windows, finest first; the last window is always j = 0.
std::vector<unsigned> window_exponents(unsigned n_target, unsigned register_bits) {
    std::vector<unsigned> js;
    int j = static_cast<int>(n_target) - static_cast<int>(register_bits);
    while (j > 0) {
        js.push_back(static_cast<unsigned>(j));
        j -= static_cast<int>(register_bits);
    }
    js.push_back(0);
    return js;
}

std::vector<double> run_settings(unsigned register_bits) {
    if (register_bits == 1) {
        return {0.0, 0.125};
    }
    return {0.0};
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

unsigned register_for_budget(std::uint64_t F) {
    unsigned m = 0;
    while ((std::uint64_t{1} << (m + 1)) <= F) {
        ++m;
    }
    return std::max(1u, m);
}

struct RepeatSearch {
    std::uint64_t repeats = 0;
    double success_rate = 0;
    bool reached = false;
};

}  // namespace

StateVector single_rate_state(const ClockModel &clock, ResourceLedger &ledger) {
    return probe_state(clock, 0.0, ledger);
}

StateVector single_rate_state(const ClockModel &clock) {
    ResourceLedger scratch;
    return single_rate_state(clock, scratch);
}

ClassicalEstimate classical_estimate(const ClockModel &clock, std::uint64_t samples, Rng &rng) {
    if (samples == 0) {
        throw std::invalid_argument("classical_estimate needs at least one sample");
    }
    ClassicalEstimate out;
    // Every probe is prepared identically; prepare once per setting and
    // ledger one query per sample.
    const StateVector plain = probe_state(clock, 0.0, out.ledger);
    const StateVector quadrature = probe_state(clock, kPi / 4, out.ledger);
    for (std::uint64_t i = 1; i < samples; ++i) {
        out.ledger.record(1);
        out.ledger.record(1);
    }

    const double s = static_cast<double>(samples);
    const double p0 = static_cast<double>(count_zeros(plain, samples, rng)) / s;
    const double q0 = static_cast<double>(count_zeros(quadrature, samples, rng)) / s;

    // p0 = (1 + cos 4 pi phi)/2, q0 = (1 - sin 4 pi phi)/2
    const double cos_est = std::clamp(2 * p0 - 1, -1.0, 1.0);
    double angle = std::acos(cos_est);
    if (1 - 2 * q0 < 0) {
        angle = 2 * kPi - angle;
    }
    double phase = std::fmod(angle / (4 * kPi), 0.5);
    if (phase < 0) {
        phase += 0.5;
    }
    out.phase_hat = phase;
    out.t_hat = phase / clock.omega0();
    return out;
}

void simulate_rate_k_with_unit_rate(const ClockModel &clock, std::uint64_t k, StateVector &state,
                                    Qubit photon, ResourceLedger &ledger) {
    if (k == 0) {
        throw std::invalid_argument("rate multiplier must be at least 1");
    }
    for (std::uint64_t i = 0; i < k; ++i) {
        tqh_fixed_rate(clock, state, photon, 1, ledger);
    }
}

double nayak_wu_bound(const LowerBoundParams &params) {
    if (!(params.Delta > 0) || !std::isfinite(params.Delta)) {
        throw std::invalid_argument("Delta must be positive");
    }
    if (params.N == 0 || params.t > params.N) {
        throw std::invalid_argument("need N >= 1 and 0 <= t <= N");
    }
    const double N = static_cast<double>(params.N);
    const double t = static_cast<double>(params.t);
    return std::sqrt(N / params.Delta) + std::sqrt(t * (N - t)) / params.Delta;
}

double phase_estimation_kernel(unsigned register_bits, double d) {
    const double M = std::ldexp(1.0, static_cast<int>(register_bits));
    const double den = M * std::sin(kPi * d);
    if (std::abs(den) < 1e-12) {
        return 1.0;
    }
    const double ratio = std::sin(M * kPi * d) / den;
    return ratio * ratio;
}

std::uint64_t budgeted_query_cost(unsigned n_target, unsigned register_bits,
                                  std::uint64_t repeats) {
    std::uint64_t per_setting = 0;
    for (unsigned j : window_exponents(n_target, register_bits)) {
        per_setting += std::uint64_t{1} << j;
    }
    return repeats * run_settings(register_bits).size() * per_setting;
}

BudgetedEstimate estimate_with_budget(unsigned n_target, unsigned register_bits,
                                      std::uint64_t repeats, TqhChannel &channel, Rng &rng) {
    if (n_target == 0 || register_bits == 0 || repeats == 0) {
        throw std::invalid_argument("estimate_with_budget: n_target, register and repeats must be >= 1");
    }
    const double M = std::ldexp(1.0, static_cast<int>(register_bits));
    const auto settings = run_settings(register_bits);

    BudgetedEstimate out;
    std::uint64_t known = 0;  // low bits of the n-bit numerator resolved so far
    unsigned known_bits = 0;
    for (unsigned j : window_exponents(n_target, register_bits)) {
        const unsigned span_bits = n_target - j;
        const unsigned unknown_bits = span_bits - known_bits;
        const double span = std::ldexp(1.0, static_cast<int>(span_bits));

        std::vector<std::pair<double, double>> readings;  // (x / 2^m, shift)
        for (std::uint64_t r = 0; r < repeats; ++r) {
            for (double shift : settings) {
                const auto reading = read_phase(register_bits, channel, rng, out.ledger,
                                                std::uint64_t{1} << j, shift);
                readings.emplace_back(static_cast<double>(reading.folded) / M, shift);
            }
        }

        std::uint64_t best = 0;
        double best_ll = -std::numeric_limits<double>::infinity();
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << unknown_bits); ++c) {
            const std::uint64_t v = (c << known_bits) | known;
            const double psi = static_cast<double>(v) / span;
            double ll = 0;
            for (const auto &[x, shift] : readings) {
                ll += std::log(std::max(phase_estimation_kernel(register_bits, psi - shift - x),
                                        1e-300));
            }
            if (ll > best_ll) {
                best_ll = ll;
                best = v;
            }
        }
        known = best;
        known_bits = span_bits;
    }
    out.numerator = known;
    return out;
}

std::vector<TradeoffPoint> tradeoff_sweep(unsigned n_target, std::span<const std::uint64_t> F_values,
                                          std::uint64_t trials, Rng &rng,
                                          const TradeoffOptions &options) {
    if (n_target == 0 || n_target >= 32) {
        throw std::invalid_argument("n_target must lie in [1, 31]");
    }
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    const std::uint64_t full = std::uint64_t{1} << n_target;
    for (auto F : F_values) {
        if (!is_power_of_two(F) || F > full) {
            throw std::invalid_argument("F = " + std::to_string(F) +
                                        " is not a power of two <= 2^n_target");
        }
    }

    const std::uint64_t base = rng();
    const ClockModel unit(0.0, options.omega0);
    std::map<unsigned, RepeatSearch> searched;

    auto success_rate = [&](unsigned m, std::uint64_t r) {
        std::uint64_t hits = 0;
        const std::uint64_t cell = Rng::derive(base, (std::uint64_t{m} << 32) | r)();
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            Rng truth_rng = Rng::derive(base, trial);
            const std::uint64_t y = truth_rng() & (full - 1);
            const double phase = static_cast<double>(y) / static_cast<double>(full);
            IdealChannel channel(ClockModel(phase / unit.omega0(), unit.omega0()));
            Rng run_rng = Rng::derive(cell, trial);
            if (estimate_with_budget(n_target, m, r, channel, run_rng).numerator == y) {
                ++hits;
            }
        }
        return static_cast<double>(hits) / static_cast<double>(trials);
    };

    auto search = [&](unsigned m) -> const RepeatSearch & {
        auto it = searched.find(m);
        if (it != searched.end()) {
            return it->second;
        }
        RepeatSearch result;
        for (std::uint64_t r = 1; r <= options.max_repeats; ++r) {
            result.repeats = r;
            result.success_rate = success_rate(m, r);
            if (result.success_rate >= options.success_threshold) {
                result.reached = true;
                break;
            }
        }
        return searched.emplace(m, result).first->second;
    };

    std::vector<TradeoffPoint> points;
    for (auto F : F_values) {
        const unsigned m_max = std::min(register_for_budget(F), n_target);
        TradeoffPoint best;
        bool have = false;
        bool best_reached = false;
        for (unsigned m = 1; m <= m_max; ++m) {
            const RepeatSearch &s = search(m);
            const std::uint64_t Q = budgeted_query_cost(n_target, m, s.repeats);
            const bool better = !have || (s.reached && !best_reached) ||
                                (s.reached == best_reached && Q <= best.Q);
            if (better) {
                best = TradeoffPoint{F, Q, s.reached ? n_target : 0u, s.success_rate, m, s.repeats};
                best_reached = s.reached;
                have = true;
            }
        }
        points.push_back(best);
    }
    return points;
}

}  // namespace qclock
