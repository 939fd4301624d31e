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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qclock/clock_channel.hpp"
#include "qclock/harness.hpp"
#include "qclock/query_complexity.hpp"
#include "qclock/rng.hpp"
#include "qclock/statevector.hpp"
#include "qclock/sync_protocol.hpp"

using namespace qclock;

namespace {

constexpr double kPi = std::numbers::pi;
const double kFourOverPiSq = 4.0 / (kPi * kPi);

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

struct Worst {
    double phi = 0;
    double probability = 2;
};

Worst worst_on_grid(unsigned n_prime, unsigned n_bits, unsigned grid_bits) {
    Worst w;
    const std::uint64_t points = std::uint64_t{1} << grid_bits;
    for (std::uint64_t i = 0; i < points; ++i) {
        const double phi = static_cast<double>(i) / static_cast<double>(points);
        const double p = success_probability_exact(n_prime, phi, n_bits);
        if (p < w.probability) {
            w = {phi, p};
        }
    }
    return w;
}

std::uint64_t monte_carlo_successes(unsigned n_bits, std::optional<double> delta, double phi,
                                    std::uint64_t trials, std::uint64_t seed) {
    const ProtocolConfig config(n_bits, delta);
    const ClockModel clock(phi, 1.0);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, t);
        const auto est = run_sync(config, clock, rng);
        hits += circular_distance(est.phase_hat, phi) < std::ldexp(1.0, -static_cast<int>(n_bits));
    }
    return hits;
}

std::vector<std::vector<std::string>> data_rows(const std::string &csv) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

harness::ExperimentSpec spec_of(std::vector<std::string> args) { return harness::parse_config(args); }

Verdict exact_grid_determinism() {
    double worst = 0;
    std::uint64_t mismatches = 0, runs = 0;
    for (unsigned np = 1; np <= 8; ++np) {
        const ProtocolConfig config(np);
        const std::uint64_t N = std::uint64_t{1} << np;
        for (std::uint64_t m = 0; m < N; ++m) {
            const double phi = static_cast<double>(m) / static_cast<double>(N);
            worst = std::max(worst, std::abs(1.0 - success_probability_exact(np, phi, np)));
            const ClockModel clock(phi, 1.0);
            for (std::uint64_t t = 0; t < 100; ++t) {
                Rng rng = Rng::derive((np << 16) | m, t);
                mismatches += run_sync(config, clock, rng).phase_hat != phi;
                ++runs;
            }
        }
    }
    return {worst <= 1e-12 && mismatches == 0,
            fmt("max |1 - P| = %.3g", worst) + ", " + std::to_string(mismatches) + "/" +
                std::to_string(runs) + " runs off-grid"};
}

Verdict four_over_pi_squared() {
    Verdict v;
    double lowest = 2;
    for (unsigned n = 3; n <= 8; ++n) {
        lowest = std::min(lowest, worst_on_grid(n, n, n + 4).probability);
    }
    v.pass = lowest >= kFourOverPiSq - 1e-9;
    const Worst w5 = worst_on_grid(5, 5, 9);
    constexpr std::uint64_t kTrials = 100000;
    const double rate = static_cast<double>(monte_carlo_successes(5, std::nullopt, w5.phi, kTrials, 2)) / kTrials;
    const double sigma = std::sqrt(w5.probability * (1 - w5.probability) / kTrials);
    const double z = std::abs(rate - w5.probability) / sigma;
    v.pass = v.pass && z <= 4;
    v.detail = fmt("min P over n=3..8 = %.6f", lowest) + fmt(" (bound %.6f)", kFourOverPiSq) +
               fmt("; n=5 worst phi=%.6f", w5.phi) + fmt(" exact %.5f", w5.probability) +
               fmt(" MC %.5f", rate) + fmt(" (%.2f sigma)", z);
    return v;
}

Verdict boosting_rule() {
    const unsigned np = boosted_register_size(4, 0.1);
    const Worst w = worst_on_grid(np, 4, np + 4);
    constexpr std::uint64_t kTrials = 10000;
    const double failure =
        1.0 - static_cast<double>(monte_carlo_successes(4, 0.1, w.phi, kTrials, 3)) / kTrials;
    const double sigma = std::sqrt(0.1 * 0.9 / kTrials);
    return {np == 7 && w.probability >= 0.9 && failure <= 0.1 + 4 * sigma,
            "n'=" + std::to_string(np) + fmt(", worst P = %.5f", w.probability) +
                fmt(", MC failure = %.4f", failure) + fmt(" (limit %.4f)", 0.1 + 4 * sigma)};
}

Verdict one_qubit_resource() {
    std::uint64_t rows_checked = 0, bad = 0;
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"--scenario", "sync", "--n", "3", "--trials", "500", "--seed", "4"},
             {"--scenario", "sync", "--n", "6", "--delta", "0.05", "--trials", "500", "--seed", "5"},
             {"--scenario", "sync", "--n", "8", "--omega0", "3", "--trials", "500", "--seed", "6"}}) {
        const auto spec = spec_of(args);
        const std::uint64_t F = (std::uint64_t{1} << ProtocolConfig(spec.n_bits, spec.delta).effective_register()) - 1;
        const auto rows = data_rows(harness::execute(spec).csv);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            ++rows_checked;
            bad += rows[i].at(9) != "1" || rows[i].at(10) != std::to_string(F);
        }
    }
    return {rows_checked == 1500 && bad == 0,
            std::to_string(rows_checked) + " sync rows, " + std::to_string(bad) + " with Q != 1 or F != 2^n'-1"};
}

Verdict handshake_equivalence() {
    Rng rng(5);
    double worst = 0, worst_transit = 0;
    for (int pair = 0; pair < 100; ++pair) {
        const double omega0 = rng.uniform(0.5, 2.0);
        const ClockModel clock(rng.uniform() / omega0, omega0);
        Rng photon_rng = rng.split(static_cast<std::uint64_t>(pair));
        const double a = std::sqrt(photon_rng.uniform());
        const StateVector photon = StateVector::from_amplitudes(
            {std::polar(a, 2 * kPi * photon_rng.uniform()),
             std::polar(std::sqrt(1 - a * a), 2 * kPi * photon_rng.uniform())});
        TransitSampler sampler(clock, rng.split(1000 + static_cast<std::uint64_t>(pair)));
        const TransitRecord transit = sampler.next();
        const TransitRecord other = sampler.next();
        for (std::uint64_t k = 0; k <= 64; ++k) {
            StateVector direct = photon;
            ResourceLedger ledger;
            tqh_fixed_rate(clock, direct, Qubit{0}, k, ledger);
            const StateVector shake = handshake_simulate(clock, k, photon, transit);
            const StateVector shake2 = handshake_simulate(clock, k, photon, other);
            worst = std::max(worst, max_deviation(direct, shake));
            worst_transit = std::max(worst_transit, max_deviation(shake, shake2));
        }
    }
    return {worst <= 1e-12 && worst_transit <= 1e-12,
            fmt("max deviation vs oracle %.3g", worst) + fmt(", across transit times %.3g", worst_transit)};
}

Verdict reduction_identity() {
    Rng rng(6);
    double worst = 0;
    bool ledger_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        const ClockModel clock(rng.uniform(), 1.0);
        const StateVector photon = StateVector::from_amplitudes(
            {std::polar(0.6, 2 * kPi * rng.uniform()), std::polar(0.8, 2 * kPi * rng.uniform())});
        for (std::uint64_t k = 1; k <= 64; ++k) {
            StateVector direct = photon, unit = photon;
            ResourceLedger a, b;
            tqh_fixed_rate(clock, direct, Qubit{0}, k, a);
            simulate_rate_k_with_unit_rate(clock, k, unit, Qubit{0}, b);
            worst = std::max(worst, max_deviation(direct, unit));
            ledger_ok = ledger_ok && b.queries == k && b.max_rate_index == 1;
        }
    }
    return {worst <= 1e-12 && ledger_ok, fmt("max deviation %.3g", worst) + (ledger_ok ? "" : ", ledger mismatch")};
}

Verdict single_rate_state_distribution() {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const double phi = i / 1000.0;
        const auto p = marginal_probabilities(single_rate_state(ClockModel(phi, 1.0)), QubitRange{0, 1});
        const double c = std::cos(2 * kPi * phi), s = std::sin(2 * kPi * phi);
        worst = std::max({worst, std::abs(p[0] - c * c), std::abs(p[1] - s * s)});
    }
    return {worst <= 1e-12, fmt("max deviation %.3g over 1000 points", worst)};
}

Verdict photon_fairness() {
    double worst = 0;
    std::uint64_t states = 0;
    Rng rng(8);
    for (unsigned np = 1; np <= 8; ++np) {
        std::vector<double> phis;
        const std::uint64_t points = std::uint64_t{1} << (np + 4);
        for (std::uint64_t i = 0; i < points; ++i) {
            phis.push_back(static_cast<double>(i) / static_cast<double>(points));
        }
        for (int i = 0; i < 50; ++i) {
            phis.push_back(rng.uniform());
        }
        for (double phi : phis) {
            const auto p = marginal_probabilities(sync_state_after_query(np, ClockModel(phi, 1.0)),
                                                  QubitRange{np, 1});
            worst = std::max(worst, std::abs(p[0] - 0.5));
            ++states;
        }
    }
    return {worst <= 1e-12, fmt("max |P(0) - 1/2| = %.3g", worst) + " over " + std::to_string(states) + " states"};
}

Verdict classical_scaling() {
    const std::array<std::uint64_t, 4> sizes{100, 1000, 10000, 100000};
    constexpr double kPhi = 1.0 / 16;
    std::vector<double> xs, ys;
    std::string medians;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        std::vector<double> errs;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Rng rng = Rng::derive(900 + si, seed);
            errs.push_back(std::abs(classical_estimate(ClockModel(kPhi, 1.0), sizes[si], rng).phase_hat - kPhi));
        }
        std::sort(errs.begin(), errs.end());
        const double med = 0.5 * (errs[99] + errs[100]);
        xs.push_back(std::log10(static_cast<double>(sizes[si])));
        ys.push_back(std::log10(med));
        medians += (si ? "," : "") + fmt("%.3g", med);
    }
    const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4, my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    return {std::abs(slope + 0.5) <= 0.1, fmt("slope %.4f", slope) + ", medians [" + medians + "]"};
}

Verdict frequency_query_tradeoff() {
    std::vector<std::uint64_t> budgets;
    for (unsigned j = 0; j <= 6; ++j) {
        budgets.push_back(std::uint64_t{1} << j);
    }
    Rng rng(10);
    const auto points = tradeoff_sweep(6, budgets, 200, rng);
    bool monotone = true;
    std::string qs;
    for (std::size_t i = 0; i < points.size(); ++i) {
        monotone = monotone && (i == 0 || points[i].Q <= points[i - 1].Q);
        qs += (i ? "," : "") + std::to_string(points[i].Q);
    }
    const double b1 = nayak_wu_bound({16, 0, 1.0});
    const double b2 = nayak_wu_bound({16, 8, 1.0});
    const double b3 = nayak_wu_bound({256, 128, 0.5});
    const bool bounds_ok = std::abs(b1 - 4.0) <= 0.01 && std::abs(b2 - 12.0) <= 0.01 &&
                           std::abs(b3 - 278.63) <= 0.01;
    return {points.front().Q > 64 && points.back().Q == 1 && monotone && bounds_ok,
            "Q over F=1..64 [" + qs + "]" + (monotone ? "" : " not monotone") +
                fmt("; bounds %.4g", b1) + fmt(", %.4g", b2) + fmt(", %.5g", b3)};
}

Verdict byte_identical_output() {
    const auto dir = std::filesystem::temp_directory_path() / "qclock_acceptance";
    std::filesystem::create_directories(dir);
    auto slurp = [](const std::filesystem::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    std::uint64_t compared = 0, differing = 0;
    for (const char *name : {"sync", "sweep-phi", "boost", "tradeoff", "lemma1", "reduction"}) {
        const std::string trials = std::string(name) == "lemma1" ? "5" : "20";
        const auto a = dir / (std::string(name) + "_a.csv");
        const auto b = dir / (std::string(name) + "_b.csv");
        harness::run(spec_of({"--scenario", name, "--n", "4", "--trials", trials, "--seed", "77", "--out", a.string()}));
        harness::run(spec_of({"--scenario", name, "--n", "4", "--trials", trials, "--seed", "77", "--out", b.string()}));
        const std::string sa = slurp(a);
        ++compared;
        differing += sa.empty() || sa != slurp(b);
    }
    std::filesystem::remove_all(dir);
    return {differing == 0, std::to_string(compared) + " scenarios run twice, " + std::to_string(differing) + " differ"};
}

}  // namespace

int main() {
    struct Criterion {
        const char *id;
        const char *name;
        std::function<Verdict()> check;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "exact-grid determinism", exact_grid_determinism},
        {"AC2", "4/pi^2 success bound", four_over_pi_squared},
        {"AC3", "boosted register", boosting_rule},
        {"AC4", "one qubit per sync", one_qubit_resource},
        {"AC5", "oracle/handshake equivalence", handshake_equivalence},
        {"AC6", "rate-k reduction identity", reduction_identity},
        {"AC7", "single-rate state distribution", single_rate_state_distribution},
        {"AC8", "photon fairness", photon_fairness},
        {"AC9", "classical baseline scaling", classical_scaling},
        {"AC10", "frequency/query tradeoff", frequency_query_tradeoff},
        {"AC11", "byte-identical output", byte_identical_output},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !v.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
