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

#ifndef QCLOCK_HARNESS_HPP
#define QCLOCK_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qclock::harness {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Scenario { Sync, SweepPhi, Boost, Tradeoff, Lemma1, Reduction };

std::string_view scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

/// Bad flags, bad values, or a meaningless combination.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Unreadable config file or unwritable output.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
    std::optional<Scenario> scenario;
    unsigned n_bits = 3;
    std::optional<double> delta;
    double omega0 = 1.0;
    /// Absent: every trial samples omega0 T uniformly from [0, 1).
    std::optional<double> t_true;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    /// Empty means "<scenario>.csv".
    std::string output_path;
};

/// Sets one field from its flag name (without "--"); '_' and '-' are
/// interchangeable. Throws UsageError naming the field.
void set_field(ExperimentSpec &spec, std::string_view key, std::string_view value);

/// `key = value` lines, `#` comments.
void load_config_text(ExperimentSpec &spec, std::string_view text);
void load_config_file(ExperimentSpec &spec, const std::string &path);

/// Command-line arguments (without the program name). A --config file is
/// applied first; every other flag overrides it regardless of position.
ExperimentSpec parse_config(std::span<const std::string> args);

/// Checks required fields and cross-field rules; throws UsageError.
void validate(const ExperimentSpec &spec);

std::string resolved_output_path(const ExperimentSpec &spec);

struct RunResult {
    std::string csv;
    std::string summary;
};

/// Runs the scenario in memory.
RunResult execute(const ExperimentSpec &spec);

/// execute() and write the CSV; returns the summary line. Throws IoError if
/// the output cannot be written.
std::string run(const ExperimentSpec &spec);

}  // namespace qclock::harness

#endif  // QCLOCK_HARNESS_HPP
