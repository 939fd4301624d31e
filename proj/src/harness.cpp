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

#include "qclock/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "qclock/clock_channel.hpp"
#include "qclock/query_complexity.hpp"
#include "qclock/sync_protocol.hpp"

namespace qclock::harness {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 6> kScenarioNames{{
    {Scenario::Sync, "sync"},
    {Scenario::SweepPhi, "sweep-phi"},
    {Scenario::Boost, "boost"},
    {Scenario::Tradeoff, "tradeoff"},
    {Scenario::Lemma1, "lemma1"},
    {Scenario::Reduction, "reduction"},
}};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string normalize_key(std::string_view key) {
    std::string k(key);
    std::replace(k.begin(), k.end(), '_', '-');
    return k;
}

template <typename T>
T parse_integer(std::string_view field, std::string_view text) {
    T value{};
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw UsageError("--" + std::string(field) + ": expected a non-negative integer, got '" +
                         std::string(text) + "'");
    }
    return value;
}

double parse_real(std::string_view field, std::string_view text) {
    double value = 0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(value)) {
        throw UsageError("--" + std::string(field) + ": expected a finite number, got '" +
                         std::string(text) + "'");
    }
    return value;
}

std::string num(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(unsigned v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

class Csv {
   public:
    explicit Csv(const ExperimentSpec &spec) {
        out_ << "# qclock " << kVersion << '\n';
        out_ << "# scenario = " << scenario_name(*spec.scenario) << '\n';
        out_ << "# n = " << spec.n_bits << '\n';
        out_ << "# delta = " << (spec.delta ? num(*spec.delta) : "none") << '\n';
        out_ << "# omega0 = " << num(spec.omega0) << '\n';
        out_ << "# t-true = " << (spec.t_true ? num(*spec.t_true) : "sampled") << '\n';
        out_ << "# trials = " << spec.trials << '\n';
        out_ << "# seed = " << spec.seed << '\n';
    }

    void meta(std::string_view key, const std::string &value) {
        out_ << "# " << key << " = " << value << '\n';
    }

    void row(std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto &c : cells) {
            if (!first) {
                out_ << ',';
            }
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

    std::string str() const { return out_.str(); }

   private:
    std::ostringstream out_;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double loglog_slope(const std::vector<double> &xs, const std::vector<double> &ys) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

double half_period_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 0.5);
    return std::min(d, 0.5 - d);
}

struct Worst {
    double phi;
    double probability;
};

Worst worst_grid(unsigned n_prime, unsigned n_bits, unsigned grid_bits) {
    const std::uint64_t points = std::uint64_t{1} << grid_bits;
    Worst w{0.0, 2.0};
    for (std::uint64_t i = 0; i < points; ++i) {
        const double phi = static_cast<double>(i) / static_cast<double>(points);
        const double p = success_probability_exact(n_prime, phi, n_bits);
        if (p < w.probability) {
            w = {phi, p};
        }
    }
    return w;
}

// Sync-style rows shared by the sync and boost scenarios.
struct SyncTally {
    std::uint64_t successes = 0;
    std::uint64_t rows = 0;
    bool resources_ok = true;
};

SyncTally sync_rows(const ExperimentSpec &spec, const ProtocolConfig &config,
                    const std::function<double(Rng &)> &draw_offset, Csv &csv) {
    csv.row({"trial", "seed", "phi_true", "t_true", "photon_bit", "raw_m", "phase_hat", "t_hat",
             "success", "Q", "F"});
    SyncTally tally;
    const double tolerance = std::ldexp(1.0, -static_cast<int>(config.n_bits()));
    const std::uint64_t expected_f =
        (std::uint64_t{1} << config.effective_register()) - 1;
    for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
        Rng rng = Rng::derive(spec.seed, trial);
        const double offset = draw_offset(rng);
        const ClockModel clock(offset, spec.omega0);
        const SyncEstimate est = run_sync(config, clock, rng);
        const bool ok = circular_distance(est.phase_hat, clock.canonical_phase()) < tolerance;
        tally.successes += ok;
        ++tally.rows;
        tally.resources_ok &= est.ledger.queries == 1 && est.ledger.max_rate_index == expected_f;
        csv.row({num(trial), num(spec.seed), num(clock.canonical_phase()), num(offset),
                 num(est.photon_bit), num(est.raw_m), num(est.phase_hat), num(est.t_hat),
                 num(ok ? 1 : 0), num(est.ledger.queries), num(est.ledger.max_rate_index)});
    }
    return tally;
}

std::function<double(Rng &)> offset_source(const ExperimentSpec &spec) {
    if (spec.t_true) {
        const double t = *spec.t_true;
        return [t](Rng &) { return t; };
    }
    const double w = spec.omega0;
    return [w](Rng &rng) { return rng.uniform() / w; };
}


RunResult run_sync_scenario(const ExperimentSpec &spec) {
    Csv csv(spec);
    const ProtocolConfig config(spec.n_bits, spec.delta);
    csv.meta("register", num(config.effective_register()));
    const SyncTally tally = sync_rows(spec, config, offset_source(spec), csv);
    std::ostringstream s;
    s << "sync: n=" << config.n_bits() << " n'=" << config.effective_register()
      << " trials=" << tally.rows
      << " success_rate=" << num(static_cast<double>(tally.successes) / static_cast<double>(tally.rows))
      << " Q=1 F=" << ((std::uint64_t{1} << config.effective_register()) - 1)
      << " resources=" << (tally.resources_ok ? "ok" : "MISMATCH");
    return {csv.str(), s.str()};
}

RunResult run_sweep_scenario(const ExperimentSpec &spec) {
    Csv csv(spec);
    const ProtocolConfig config(spec.n_bits, spec.delta);
    const unsigned n_prime = config.effective_register();
    const unsigned grid_bits = config.n_bits() + 4;
    csv.meta("register", num(n_prime));
    csv.meta("grid-points", num(std::uint64_t{1} << grid_bits));
    csv.row({"seed", "phi", "success_probability"});
    const std::uint64_t points = std::uint64_t{1} << grid_bits;
    Worst w{0.0, 2.0};
    for (std::uint64_t i = 0; i < points; ++i) {
        const double phi = static_cast<double>(i) / static_cast<double>(points);
        const double p = success_probability_exact(n_prime, phi, config.n_bits());
        if (p < w.probability) {
            w = {phi, p};
        }
        csv.row({num(spec.seed), num(phi), num(p)});
    }
    std::ostringstream s;
    s << "sweep-phi: n=" << config.n_bits() << " n'=" << n_prime << " grid=" << points
      << " min_success_probability=" << num(w.probability) << " at phi=" << num(w.phi)
      << " (4/pi^2=" << num(4.0 / (std::numbers::pi * std::numbers::pi)) << ")";
    return {csv.str(), s.str()};
}

RunResult run_boost_scenario(const ExperimentSpec &spec) {
    Csv csv(spec);
    const double delta = spec.delta.value_or(0.1);
    const ProtocolConfig config(spec.n_bits, delta);
    const unsigned n_prime = config.effective_register();
    const Worst w = worst_grid(n_prime, config.n_bits(), n_prime + 4);
    csv.meta("register", num(n_prime));
    csv.meta("worst-phi", num(w.phi));
    csv.meta("worst-success-probability", num(w.probability));
    const double offset = w.phi / spec.omega0;
    const SyncTally tally = sync_rows(
        spec, config, [offset](Rng &) { return offset; }, csv);
    const double failure =
        1.0 - static_cast<double>(tally.successes) / static_cast<double>(tally.rows);
    std::ostringstream s;
    s << "boost: n=" << config.n_bits() << " delta=" << num(delta) << " n'=" << n_prime
      << " worst_phi=" << num(w.phi) << " worst_success_probability=" << num(w.probability)
      << " monte_carlo_failure_rate=" << num(failure) << " trials=" << tally.rows;
    return {csv.str(), s.str()};
}

RunResult run_tradeoff_scenario(const ExperimentSpec &spec) {
    Csv csv(spec);
    std::vector<std::uint64_t> budgets;
    for (unsigned j = 0; j <= spec.n_bits; ++j) {
        budgets.push_back(std::uint64_t{1} << j);
    }
    TradeoffOptions options;
    options.omega0 = spec.omega0;
    Rng rng(spec.seed);
    const auto points = tradeoff_sweep(spec.n_bits, budgets, spec.trials, rng, options);
    csv.meta("success-threshold", num(options.success_threshold));
    csv.row({"seed", "F", "Q", "n_bits_achieved", "success_rate", "FQ_product", "register_bits",
             "repeats"});
    double c = -1e9;
    for (const auto &p : points) {
        const double fq = static_cast<double>(p.F) * static_cast<double>(p.Q);
        c = std::max(c, static_cast<double>(p.n_bits_achieved) - std::log2(fq));
        csv.row({num(spec.seed), num(p.F), num(p.Q), num(p.n_bits_achieved), num(p.success_rate),
                 num(p.F * p.Q), num(p.register_bits), num(p.repeats)});
    }
    std::ostringstream s;
    s << "tradeoff: n=" << spec.n_bits << " points=" << points.size()
      << " Q(F=1)=" << points.front().Q << " Q(F=" << points.back().F << ")=" << points.back().Q
      << " FQ>=2^(n-c) with c=" << num(c);
    return {csv.str(), s.str()};
}

RunResult run_lemma1_scenario(const ExperimentSpec &spec) {
    Csv csv(spec);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const double phi = i / 1000.0;
        const auto probs = marginal_probabilities(single_rate_state(ClockModel(phi / spec.omega0, spec.omega0)),
                                                  QubitRange{0, 1});
        const double c = std::cos(2 * std::numbers::pi * phi);
        const double sn = std::sin(2 * std::numbers::pi * phi);
        worst = std::max({worst, std::abs(probs[0] - c * c), std::abs(probs[1] - sn * sn)});
    }
    csv.meta("lemma1-state-max-deviation", num(worst));
    csv.row({"seed", "S", "trial", "phi_true", "phi_hat", "abs_error", "Q", "F"});

    const std::array<std::uint64_t, 4> sample_sizes{100, 1000, 10000, 100000};
    std::vector<double> xs, medians;
    for (std::size_t si = 0; si < sample_sizes.size(); ++si) {
        const auto S = sample_sizes[si];
        std::vector<double> errors;
        for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
            Rng rng = Rng::derive(Rng::derive(spec.seed, si)(), trial);
            const double offset = spec.t_true ? *spec.t_true : 0.5 * rng.uniform() / spec.omega0;
            const ClockModel clock(offset, spec.omega0);
            const ClassicalEstimate est = classical_estimate(clock, S, rng);
            const double err = half_period_distance(est.phase_hat, clock.canonical_phase());
            errors.push_back(err);
            csv.row({num(spec.seed), num(S), num(trial), num(clock.canonical_phase()),
                     num(est.phase_hat), num(err), num(est.ledger.queries),
                     num(est.ledger.max_rate_index)});
        }
        xs.push_back(static_cast<double>(S));
        medians.push_back(median(errors));
    }
    std::ostringstream s;
    s << "lemma1: state_max_deviation=" << num(worst) << " median_error=[";
    for (std::size_t i = 0; i < medians.size(); ++i) {
        s << (i ? "," : "") << num(medians[i]);
    }
    s << "] loglog_slope=" << num(loglog_slope(xs, medians));
    return {csv.str(), s.str()};
}

StateVector random_photon(Rng &rng) {
    const double a = std::sqrt(rng.uniform());
    const double b = std::sqrt(1 - a * a);
    return StateVector::from_amplitudes(
        {std::polar(a, 2 * std::numbers::pi * rng.uniform()),
         std::polar(b, 2 * std::numbers::pi * rng.uniform())});
}

RunResult run_reduction_scenario(const ExperimentSpec &spec) {
    Csv csv(spec);
    csv.row({"seed", "trial", "k", "phi_true", "t_transit", "reduction_deviation",
             "handshake_deviation", "Q_unit"});
    double worst_reduction = 0, worst_handshake = 0;
    for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
        Rng rng = Rng::derive(spec.seed, trial);
        const double offset = spec.t_true ? *spec.t_true : rng.uniform() / spec.omega0;
        World world = make_world(offset, spec.omega0, rng.split(1));
        const StateVector photon = random_photon(rng);
        for (std::uint64_t k = 1; k <= 64; ++k) {
            ResourceLedger direct_ledger, unit_ledger;
            StateVector direct = photon;
            tqh_fixed_rate(world.clock, direct, Qubit{0}, k, direct_ledger);
            StateVector unit = photon;
            simulate_rate_k_with_unit_rate(world.clock, k, unit, Qubit{0}, unit_ledger);
            const TransitRecord transit = world.transit.next();
            const StateVector shake = handshake_simulate(world.clock, k, photon, transit);
            const double dr = max_deviation(direct, unit);
            const double dh = max_deviation(direct, shake);
            worst_reduction = std::max(worst_reduction, dr);
            worst_handshake = std::max(worst_handshake, dh);
            csv.row({num(spec.seed), num(trial), num(k), num(world.clock.canonical_phase()),
                     num(static_cast<double>(transit.t_transit)), num(dr), num(dh), num(unit_ledger.queries)});
        }
    }
    std::ostringstream s;
    s << "reduction: k<=64 trials=" << spec.trials
      << " max_reduction_deviation=" << num(worst_reduction)
      << " max_handshake_deviation=" << num(worst_handshake);
    return {csv.str(), s.str()};
}

}  // namespace

std::string_view scenario_name(Scenario s) {
    for (const auto &[value, name] : kScenarioNames) {
        if (value == s) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (const auto &[value, n] : kScenarioNames) {
        if (n == name) {
            return value;
        }
    }
    return std::nullopt;
}

void set_field(ExperimentSpec &spec, std::string_view raw_key, std::string_view raw_value) {
    const std::string key = normalize_key(raw_key);
    const std::string value = trim(raw_value);
    if (key == "scenario") {
        auto s = parse_scenario(value);
        if (!s) {
            throw UsageError("--scenario: unknown scenario '" + value +
                             "' (expected sync, sweep-phi, boost, tradeoff, lemma1 or reduction)");
        }
        spec.scenario = *s;
    } else if (key == "n") {
        const auto n = parse_integer<unsigned>("n", value);
        if (n < 1 || n > 16) {
            throw UsageError("--n: must lie in [1, 16]");
        }
        spec.n_bits = n;
    } else if (key == "delta") {
        const double d = parse_real("delta", value);
        if (!(d > 0 && d < 0.5)) {
            throw UsageError("--delta: must lie in (0, 1/2)");
        }
        spec.delta = d;
    } else if (key == "omega0") {
        const double w = parse_real("omega0", value);
        if (!(w > 0)) {
            throw UsageError("--omega0: must be positive");
        }
        spec.omega0 = w;
    } else if (key == "t-true") {
        spec.t_true = parse_real("t-true", value);
    } else if (key == "trials") {
        const auto t = parse_integer<std::uint64_t>("trials", value);
        if (t < 1) {
            throw UsageError("--trials: must be at least 1");
        }
        spec.trials = t;
    } else if (key == "seed") {
        spec.seed = parse_integer<std::uint64_t>("seed", value);
    } else if (key == "out") {
        if (value.empty()) {
            throw UsageError("--out: empty path");
        }
        spec.output_path = value;
    } else {
        throw UsageError("unknown option '" + std::string(raw_key) + "'");
    }
}

void load_config_text(ExperimentSpec &spec, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        if (normalize_key(key) == "config") {
            throw UsageError("config line " + std::to_string(line_no) +
                             ": 'config' cannot be nested");
        }
        try {
            set_field(spec, key, std::string_view(stripped).substr(eq + 1));
        } catch (const UsageError &e) {
            throw UsageError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void load_config_file(ExperimentSpec &spec, const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    load_config_text(spec, buf.str());
}

ExperimentSpec parse_config(std::span<const std::string> args) {
    std::vector<std::pair<std::string, std::string>> flags;
    std::optional<std::string> config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string &arg = args[i];
        if (arg.rfind("--", 0) != 0 || arg.size() == 2) {
            throw UsageError("unexpected argument '" + arg + "'");
        }
        std::string key = arg.substr(2);
        std::string value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.erase(eq);
        } else {
            if (i + 1 >= args.size()) {
                throw UsageError("--" + key + ": missing value");
            }
            value = args[++i];
        }
        if (normalize_key(key) == "config") {
            config_path = value;
        } else {
            flags.emplace_back(std::move(key), std::move(value));
        }
    }
    ExperimentSpec spec;
    if (config_path) {
        load_config_file(spec, *config_path);
    }
    for (const auto &[key, value] : flags) {
        set_field(spec, key, value);
    }
    validate(spec);
    return spec;
}

void validate(const ExperimentSpec &spec) {
    if (!spec.scenario) {
        throw UsageError("--scenario is required");
    }
    const Scenario s = *spec.scenario;
    if (spec.delta && (s == Scenario::Tradeoff || s == Scenario::Lemma1 || s == Scenario::Reduction)) {
        throw UsageError("--delta cannot be combined with scenario " +
                         std::string(scenario_name(s)));
    }
    if (spec.t_true && (s == Scenario::SweepPhi || s == Scenario::Boost || s == Scenario::Tradeoff)) {
        throw UsageError("--t-true cannot be combined with scenario " +
                         std::string(scenario_name(s)));
    }
    if (s == Scenario::Tradeoff && spec.n_bits > 10) {
        throw UsageError("--n: tradeoff sweeps are limited to n <= 10");
    }
    if ((s == Scenario::SweepPhi || s == Scenario::Boost) && spec.n_bits > 12) {
        throw UsageError("--n: grid sweeps are limited to n <= 12");
    }
    if (spec.delta) {
        const unsigned n_prime = boosted_register_size(spec.n_bits, *spec.delta);
        if (n_prime + 1 > StateVector::kMaxQubits) {
            throw UsageError("--delta: boosted register too large to simulate");
        }
    }
}

std::string resolved_output_path(const ExperimentSpec &spec) {
    if (!spec.output_path.empty()) {
        return spec.output_path;
    }
    return std::string(scenario_name(spec.scenario.value_or(Scenario::Sync))) + ".csv";
}

RunResult execute(const ExperimentSpec &spec) {
    validate(spec);
    switch (*spec.scenario) {
        case Scenario::Sync:
            return run_sync_scenario(spec);
        case Scenario::SweepPhi:
            return run_sweep_scenario(spec);
        case Scenario::Boost:
            return run_boost_scenario(spec);
        case Scenario::Tradeoff:
            return run_tradeoff_scenario(spec);
        case Scenario::Lemma1:
            return run_lemma1_scenario(spec);
        case Scenario::Reduction:
            return run_reduction_scenario(spec);
    }
    throw UsageError("unhandled scenario");
}

std::string run(const ExperimentSpec &spec) {
    const RunResult result = execute(spec);
    const std::string path = resolved_output_path(spec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << result.csv;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
    return result.summary;
}

}  // namespace qclock::harness
