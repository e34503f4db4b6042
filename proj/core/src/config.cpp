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

#include "squint/config.hpp"

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "squint/distinguishability.hpp"
#include "squint/unitaries.hpp"

namespace squint {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void require_object(const json& node, const std::string& where) {
  if (!node.is_object()) fail(where, "expected an object");
}

void check_keys(const json& node, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& item : node.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail(where, "unknown key \"" + item.key() + "\"");
  }
}

double number_at(const json& node, const std::string& where) {
  if (!node.is_number()) fail(where, "expected a number");
  return node.get<double>();
}

std::int64_t integer_at(const json& node, const std::string& where) {
  if (!node.is_number_integer()) fail(where, "expected an integer");
  return node.get<std::int64_t>();
}

/// A complex entry is either a plain number (real) or an [re, im] pair.
Complex complex_entry(const json& node, const std::string& where) {
  if (node.is_number()) return Complex(node.get<double>(), 0.0);
  if (node.is_array() && node.size() == 2 && node[0].is_number() &&
      node[1].is_number()) {
    return Complex(node[0].get<double>(), node[1].get<double>());
  }
  fail(where, "expected a number or an [re, im] pair");
}

CMatrix matrix_from(const json& node, const std::string& where) {
  if (!node.is_array() || node.empty()) fail(where, "expected a matrix (array of rows)");
  const int rows = static_cast<int>(node.size());
  CMatrix result(rows, rows);
  for (int i = 0; i < rows; ++i) {
    const json& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != rows) {
      fail(where, "matrix must be square; row " + std::to_string(i) +
                      " has the wrong length");
    }
    for (int j = 0; j < rows; ++j) {
      result(i, j) = complex_entry(row[static_cast<std::size_t>(j)],
                                   where + "[" + std::to_string(i) + "][" +
                                       std::to_string(j) + "]");
    }
  }
  return result;
}

CMatrix parse_unitary(const json& node) {
  const std::string where = "scenario.unitary";
  if (node.is_string()) {
    const std::string name = node.get<std::string>();
    if (name == "beamsplitter") return beamsplitter_unitary();
    if (name == "tritter") return tritter_unitary();
    fail(where, "unknown named unitary \"" + name + "\"");
  }
  if (node.is_object()) {
    check_keys(node, {"haar"}, where);
    if (!node.contains("haar")) fail(where, "expected a \"haar\" key");
    const json& haar = node["haar"];
    require_object(haar, where + ".haar");
    check_keys(haar, {"modes", "seed"}, where + ".haar");
    if (!haar.contains("modes")) fail(where + ".haar", "missing \"modes\"");
    const std::int64_t modes = integer_at(haar["modes"], where + ".haar.modes");
    std::int64_t seed = 0;
    if (haar.contains("seed")) seed = integer_at(haar["seed"], where + ".haar.seed");
    if (modes < 1 || modes > kMaxModes) fail(where + ".haar.modes", "out of range");
    if (seed < 0) fail(where + ".haar.seed", "must be non-negative");
    return haar_random_unitary(static_cast<int>(modes),
                               static_cast<std::uint64_t>(seed));
  }
  return matrix_from(node, where);
}

std::vector<SqueezeParams> parse_squeezing(const json& node) {
  const std::string where = "scenario.squeezing";
  if (!node.is_array()) fail(where, "expected an array");
  std::vector<SqueezeParams> result;
  result.reserve(node.size());
  int index = 0;
  for (const json& entry : node) {
    const std::string slot = where + "[" + std::to_string(index++) + "]";
    SqueezeParams params;
    if (entry.is_number()) {
      params.r = entry.get<double>();
    } else if (entry.is_object()) {
      check_keys(entry, {"r", "theta"}, slot);
      if (!entry.contains("r")) fail(slot, "missing \"r\"");
      params.r = number_at(entry["r"], slot + ".r");
      if (entry.contains("theta")) params.theta = number_at(entry["theta"], slot + ".theta");
    } else {
      fail(slot, "expected a number or an {r, theta} object");
    }
    if (params.r < 0.0) fail(slot, "squeezing magnitude must be non-negative");
    result.push_back(params);
  }
  return result;
}

struct OverlapResult {
  CMatrix matrix;
  bool homogeneous = false;
  double epsilon = 0.0;
};

OverlapResult parse_overlap(const json& node, int modes) {
  const std::string where = "scenario.overlap";
  OverlapResult result;
  if (node.is_string()) {
    const std::string name = node.get<std::string>();
    if (name == "all_ones") {
      result.matrix = CMatrix::Ones(modes, modes);
      return result;
    }
    if (name == "identity") {
      result.matrix = CMatrix::Identity(modes, modes);
      return result;
    }
    fail(where, "unknown named overlap \"" + name + "\"");
  }
  if (node.is_object()) {
    check_keys(node, {"homogeneous", "gaussian"}, where);
    if (node.contains("homogeneous") && node.contains("gaussian")) {
      fail(where, "choose one of \"homogeneous\" or \"gaussian\"");
    }
    if (node.contains("homogeneous")) {
      const json& homog = node["homogeneous"];
      require_object(homog, where + ".homogeneous");
      check_keys(homog, {"epsilon"}, where + ".homogeneous");
      if (!homog.contains("epsilon")) fail(where + ".homogeneous", "missing \"epsilon\"");
      const double epsilon = number_at(homog["epsilon"], where + ".homogeneous.epsilon");
      result.matrix = homogeneous_overlap(epsilon, modes);
      result.homogeneous = true;
      result.epsilon = epsilon;
      return result;
    }
    if (node.contains("gaussian")) {
      const json& pulse = node["gaussian"];
      require_object(pulse, where + ".gaussian");
      check_keys(pulse, {"delays", "spacing", "sigma_t", "omega0"}, where + ".gaussian");
      GaussianPulseModel model;
      if (pulse.contains("sigma_t")) {
        model.sigma_t = number_at(pulse["sigma_t"], where + ".gaussian.sigma_t");
        if (model.sigma_t <= 0.0) fail(where + ".gaussian.sigma_t", "must be positive");
      }
      if (pulse.contains("omega0")) {
        model.omega0 = number_at(pulse["omega0"], where + ".gaussian.omega0");
      }
      if (pulse.contains("delays") == pulse.contains("spacing")) {
        fail(where + ".gaussian", "give exactly one of \"delays\" or \"spacing\"");
      }
      if (pulse.contains("delays")) {
        const json& delays = pulse["delays"];
        if (!delays.is_array()) fail(where + ".gaussian.delays", "expected an array");
        if (static_cast<int>(delays.size()) != modes) {
          fail(where + ".gaussian.delays", "expected one delay per mode");
        }
        int index = 0;
        for (const json& value : delays) {
          model.delays.push_back(number_at(
              value, where + ".gaussian.delays[" + std::to_string(index++) + "]"));
        }
      } else {
        const double spacing = number_at(pulse["spacing"], where + ".gaussian.spacing");
        model.delays = centered_equal_delays(modes, spacing);
      }
      result.matrix = gaussian_overlap(model);
      return result;
    }
    fail(where, "expected \"homogeneous\" or \"gaussian\"");
  }
  result.matrix = matrix_from(node, where);
  if (result.matrix.rows() != modes) {
    fail(where, "overlap dimension does not match the unitary");
  }
  return result;
}

RVector parse_efficiencies(const json& node, int modes) {
  const std::string where = "scenario.efficiencies";
  if (!node.is_array()) fail(where, "expected an array");
  if (static_cast<int>(node.size()) != modes) {
    fail(where, "expected one efficiency per mode");
  }
  RVector result(modes);
  int index = 0;
  for (const json& value : node) {
    result(index) = number_at(value, where + "[" + std::to_string(index) + "]");
    ++index;
  }
  return result;
}

OutcomePattern parse_pattern(const json& node, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of counts");
  OutcomePattern pattern;
  pattern.reserve(node.size());
  int index = 0;
  for (const json& value : node) {
    const std::int64_t count =
        integer_at(value, where + "[" + std::to_string(index++) + "]");
    if (count < 0) fail(where, "photon counts must be non-negative");
    pattern.push_back(static_cast<int>(count));
  }
  return pattern;
}

std::vector<OutcomePattern> parse_pattern_list(const json& node,
                                               const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array of patterns");
  std::vector<OutcomePattern> result;
  result.reserve(node.size());
  int index = 0;
  for (const json& entry : node) {
    result.push_back(parse_pattern(entry, where + "[" + std::to_string(index++) + "]"));
  }
  return result;
}

ScanRequest parse_scan(const json& node) {
  const std::string where = "scan";
  require_object(node, where);
  check_keys(node, {"delays", "omegas", "patterns"}, where);
  ScanRequest scan;
  if (!node.contains("delays")) fail(where, "missing \"delays\"");
  if (!node.contains("omegas")) fail(where, "missing \"omegas\"");
  if (!node.contains("patterns")) fail(where, "missing \"patterns\"");
  const json& delays = node["delays"];
  if (!delays.is_array() || delays.empty()) fail(where + ".delays", "expected a non-empty array");
  int index = 0;
  for (const json& value : delays) {
    scan.delays.push_back(
        number_at(value, where + ".delays[" + std::to_string(index++) + "]"));
  }
  const json& omegas = node["omegas"];
  if (!omegas.is_array() || omegas.empty()) fail(where + ".omegas", "expected a non-empty array");
  index = 0;
  for (const json& value : omegas) {
    scan.omegas.push_back(
        number_at(value, where + ".omegas[" + std::to_string(index++) + "]"));
  }
  scan.patterns = parse_pattern_list(node["patterns"], where + ".patterns");
  if (scan.patterns.empty()) fail(where + ".patterns", "expected a non-empty array");
  return scan;
}

struct ScenarioResult {
  Scenario scenario;
  bool homogeneous = false;
  double epsilon = 0.0;
};

ScenarioResult parse_scenario_node(const json& node) {
  const std::string where = "scenario";
  require_object(node, where);
  check_keys(node, {"unitary", "squeezing", "overlap", "efficiencies"}, where);
  if (!node.contains("unitary")) fail(where, "missing \"unitary\"");
  if (!node.contains("squeezing")) fail(where, "missing \"squeezing\"");

  ScenarioResult result;
  result.scenario.unitary = parse_unitary(node["unitary"]);
  const int modes = static_cast<int>(result.scenario.unitary.rows());
  result.scenario.squeezing = parse_squeezing(node["squeezing"]);
  if (node.contains("overlap")) {
    OverlapResult overlap = parse_overlap(node["overlap"], modes);
    result.scenario.overlap = overlap.matrix;
    result.homogeneous = overlap.homogeneous;
    result.epsilon = overlap.epsilon;
  } else {
    result.scenario.overlap = CMatrix::Ones(modes, modes);
  }
  if (node.contains("efficiencies")) {
    result.scenario.efficiencies = parse_efficiencies(node["efficiencies"], modes);
  } else {
    result.scenario.efficiencies = RVector::Ones(modes);
  }
  return result;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& error) {
    throw ConfigError(std::string("config is not valid JSON: ") + error.what());
  }
}

json complex_to_json(const Complex& value) {
  return json::array({value.real(), value.imag()});
}

json matrix_to_json(const CMatrix& matrix) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      row.push_back(complex_to_json(matrix(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  const json root = parse_text(text);
  require_object(root, "config");
  check_keys(root,
             {"scenario", "patterns", "max_total", "click_patterns", "scan",
              "samples", "seed", "out", "format"},
             "config");
  if (!root.contains("scenario")) fail("config", "missing \"scenario\"");

  RunConfig config;
  ScenarioResult scenario = parse_scenario_node(root["scenario"]);
  config.scenario = scenario.scenario;
  config.homogeneous_overlap_model = scenario.homogeneous;
  config.homogeneous_epsilon = scenario.epsilon;

  if (root.contains("patterns")) {
    config.patterns = parse_pattern_list(root["patterns"], "patterns");
  }
  if (root.contains("max_total")) {
    const std::int64_t value = integer_at(root["max_total"], "max_total");
    if (value < 0) fail("max_total", "must be non-negative");
    config.max_total = static_cast<int>(value);
  }
  if (root.contains("click_patterns")) {
    const json& node = root["click_patterns"];
    if (node.is_string()) {
      if (node.get<std::string>() != "all") {
        fail("click_patterns", "expected \"all\" or an array of index lists");
      }
      config.all_click_patterns = true;
    } else if (node.is_array()) {
      int index = 0;
      for (const json& entry : node) {
        const std::string where = "click_patterns[" + std::to_string(index++) + "]";
        if (!entry.is_array()) fail(where, "expected an array of 1-based mode indices");
        ClickPattern clicks;
        int slot = 0;
        for (const json& value : entry) {
          const std::int64_t mode =
              integer_at(value, where + "[" + std::to_string(slot++) + "]");
          if (mode < 1) fail(where, "mode indices are 1-based");
          clicks.push_back(static_cast<int>(mode - 1));
        }
        config.click_patterns.push_back(clicks);
      }
    } else {
      fail("click_patterns", "expected \"all\" or an array of index lists");
    }
  }
  if (root.contains("scan")) {
    config.scan = parse_scan(root["scan"]);
    config.has_scan = true;
  }
  if (root.contains("samples")) {
    const std::int64_t value = integer_at(root["samples"], "samples");
    if (value < 1) fail("samples", "must be positive");
    config.samples = static_cast<int>(value);
  }
  if (root.contains("seed")) {
    const std::int64_t value = integer_at(root["seed"], "seed");
    if (value < 0) fail("seed", "must be non-negative");
    config.seed = static_cast<std::uint64_t>(value);
  }
  if (root.contains("out")) {
    if (!root["out"].is_string()) fail("out", "expected a string");
    config.out = root["out"].get<std::string>();
  }
  if (root.contains("format")) {
    if (!root["format"].is_string()) fail("format", "expected a string");
    config.format = root["format"].get<std::string>();
    if (config.format != "csv" && config.format != "json") {
      fail("format", "expected \"csv\" or \"json\"");
    }
  }

  validate_scenario(config.scenario);
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_run_config(buffer.str());
}

Scenario parse_scenario(const std::string& text) {
  const json root = parse_text(text);
  ScenarioResult result = parse_scenario_node(root);
  validate_scenario(result.scenario);
  return result.scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
  json root;
  root["unitary"] = matrix_to_json(scenario.unitary);
  json squeezing = json::array();
  for (const SqueezeParams& params : scenario.squeezing) {
    squeezing.push_back(json{{"r", params.r}, {"theta", params.theta}});
  }
  root["squeezing"] = squeezing;
  root["overlap"] = matrix_to_json(scenario.overlap);
  json efficiencies = json::array();
  for (Eigen::Index i = 0; i < scenario.efficiencies.size(); ++i) {
    efficiencies.push_back(scenario.efficiencies(i));
  }
  root["efficiencies"] = efficiencies;
  return root.dump(2);
}

}  // namespace squint
