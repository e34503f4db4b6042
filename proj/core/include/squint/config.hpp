// Copyright 2026 The squint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQUINT_CONFIG_HPP
#define SQUINT_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "squint/scenario.hpp"
#include "squint/types.hpp"

namespace squint {

/// The run configuration text is malformed: invalid JSON, a wrong type, an
/// unknown key, or a structurally impossible value. Distinct from
/// ValidationError, which covers well-formed configs that describe an
/// invalid scenario (e.g. a non-unitary matrix).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Delay-scan request: a grid of normalized delays, one curve block per
/// carrier detuning, and the outcome patterns evaluated at every grid point.
struct ScanRequest {
  std::vector<double> delays;
  std::vector<double> omegas;
  std::vector<OutcomePattern> patterns;
};

/// Parsed run configuration: the scenario plus per-command parameters.
/// Fields that were absent keep their documented defaults; max_total and
/// samples use -1 / 0 as "unset" sentinels so the CLI can overlay flags.
struct RunConfig {
  Scenario scenario;

  /// True when the overlap was given as a homogeneous-model shorthand;
  /// the decomposition command needs the underlying epsilon.
  bool homogeneous_overlap_model = false;
  double homogeneous_epsilon = 0.0;

  std::vector<OutcomePattern> patterns;
  int max_total = -1;

  bool all_click_patterns = false;
  std::vector<ClickPattern> click_patterns;  // zero-based mode indices

  bool has_scan = false;
  ScanRequest scan;

  int samples = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
};

/// Parses a JSON run configuration. Structural problems (bad JSON, unknown
/// keys, wrong types) throw ConfigError; a well-formed config describing an
/// invalid scenario throws ValidationError from scenario validation.
RunConfig parse_run_config(const std::string& text);

/// Reads the file at `path` and parses it. A missing or unreadable file is
/// reported as ConfigError.
RunConfig load_run_config(const std::string& path);

/// Parses a standalone scenario object (the value of a config's "scenario"
/// key). The parsed scenario is validated before it is returned.
Scenario parse_scenario(const std::string& text);

/// Serializes a scenario to canonical JSON: full literal matrices with
/// complex entries as [re, im] pairs and squeezing as {r, theta} objects.
/// parse_scenario(serialize_scenario(s)) reproduces every field exactly.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace squint

#endif
