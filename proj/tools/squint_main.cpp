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

// Command-line front end. Subcommands: prob, scan, threshold, decompose,
// validate. Exit codes: 0 success, 1 validation-suite failure, 2 config
// parse error, 3 domain validation error, 4 capacity error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "squint/config.hpp"
#include "squint/distinguishability.hpp"
#include "squint/pnr.hpp"
#include "squint/threshold.hpp"
#include "squint/types.hpp"
#include "squint/validation.hpp"

namespace {

using nlohmann::json;
using namespace squint;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string pattern_string(const OutcomePattern& pattern) {
  std::string result;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i > 0) result += ':';
    result += std::to_string(pattern[i]);
  }
  return result;
}

/// Click patterns print 1-based; the empty pattern prints "-".
std::string clicks_string(const ClickPattern& clicks) {
  if (clicks.empty()) return "-";
  std::string result;
  for (std::size_t i = 0; i < clicks.size(); ++i) {
    if (i > 0) result += ':';
    result += std::to_string(clicks[i] + 1);
  }
  return result;
}

std::string csv_quote(const std::string& text) {
  std::string result = "\"";
  for (char c : text) {
    if (c == '"') result += '"';
    result += c;
  }
  result += '"';
  return result;
}

/// Output sink: stdout by default, a file when a path is set.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<ClickPattern> every_click_pattern(int modes) {
  std::vector<ClickPattern> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << modes); ++mask) {
    ClickPattern clicks;
    for (int mode = 0; mode < modes; ++mode) {
      if ((mask >> mode) & 1u) clicks.push_back(mode);
    }
    result.push_back(clicks);
  }
  return result;
}

int run_prob(const RunConfig& config) {
  std::vector<std::pair<OutcomePattern, double>> rows;
  if (!config.patterns.empty()) {
    for (const OutcomePattern& pattern : config.patterns) {
      rows.emplace_back(pattern, probability(config.scenario, pattern));
    }
  } else if (config.max_total >= 0) {
    const ProbabilityTable table =
        distribution(config.scenario, config.max_total);
    for (const auto& [pattern, value] : table.probabilities) {
      rows.emplace_back(pattern, value);
    }
  } else {
    throw ConfigError("prob needs \"patterns\" or \"max_total\"");
  }

  Sink sink(config.out);
  if (config.format == "json") {
    json out;
    out["command"] = "prob";
    out["rows"] = json::array();
    for (const auto& [pattern, value] : rows) {
      out["rows"].push_back(json{{"pattern", pattern}, {"probability", value}});
    }
    sink.stream() << out.dump(2) << '\n';
  } else {
    sink.stream() << "pattern,probability\n";
    for (const auto& [pattern, value] : rows) {
      sink.stream() << pattern_string(pattern) << ','
                    << format_double(value) << '\n';
    }
  }
  return 0;
}

int run_scan(const RunConfig& config) {
  if (!config.has_scan) throw ConfigError("scan needs a \"scan\" section");

  std::vector<DelayScanRow> rows;
  for (double omega : config.scan.omegas) {
    const std::vector<DelayScanRow> block = delay_scan(
        config.scenario, config.scan.delays, omega, config.scan.patterns);
    rows.insert(rows.end(), block.begin(), block.end());
  }

  Sink sink(config.out);
  if (config.format == "json") {
    json out;
    out["command"] = "scan";
    out["rows"] = json::array();
    for (const DelayScanRow& row : rows) {
      out["rows"].push_back(json{{"delta_t_over_sigma", row.normalized_delay},
                                 {"omega0", row.omega0},
                                 {"pattern", row.pattern},
                                 {"probability", row.probability}});
    }
    sink.stream() << out.dump(2) << '\n';
  } else {
    sink.stream() << "delta_t_over_sigma,omega0,pattern,probability\n";
    for (const DelayScanRow& row : rows) {
      sink.stream() << format_double(row.normalized_delay) << ','
                    << format_double(row.omega0) << ','
                    << pattern_string(row.pattern) << ','
                    << format_double(row.probability) << '\n';
    }
  }
  return 0;
}

int run_threshold(const RunConfig& config) {
  std::vector<ClickPattern> requests;
  if (config.all_click_patterns) {
    requests = every_click_pattern(config.scenario.modes());
  } else if (!config.click_patterns.empty()) {
    requests = config.click_patterns;
  } else {
    throw ConfigError("threshold needs \"click_patterns\"");
  }

  std::vector<std::pair<ClickPattern, double>> rows;
  for (const ClickPattern& clicks : requests) {
    rows.emplace_back(clicks, click_pattern_probability(config.scenario, clicks));
  }

  Sink sink(config.out);
  if (config.format == "json") {
    json out;
    out["command"] = "threshold";
    out["rows"] = json::array();
    for (const auto& [clicks, value] : rows) {
      json one_based = json::array();
      for (int mode : clicks) one_based.push_back(mode + 1);
      out["rows"].push_back(json{{"clicks", one_based}, {"probability", value}});
    }
    sink.stream() << out.dump(2) << '\n';
  } else {
    sink.stream() << "clicks,probability\n";
    for (const auto& [clicks, value] : rows) {
      sink.stream() << clicks_string(clicks) << ','
                    << format_double(value) << '\n';
    }
  }
  return 0;
}

int run_decompose(const RunConfig& config) {
  if (!config.homogeneous_overlap_model) {
    throw ValidationError(
        ValidationError::Kind::bad_argument,
        "decompose needs an overlap given as {\"homogeneous\": {\"epsilon\": ...}}");
  }
  if (config.patterns.empty()) throw ConfigError("decompose needs \"patterns\"");

  std::vector<HomogeneousDecomposition> decompositions;
  for (const OutcomePattern& pattern : config.patterns) {
    decompositions.push_back(homogeneous_decomposition(
        config.scenario, config.homogeneous_epsilon, pattern));
  }

  Sink sink(config.out);
  if (config.format == "json") {
    json out;
    out["command"] = "decompose";
    out["rows"] = json::array();
    for (const HomogeneousDecomposition& dec : decompositions) {
      json terms = json::array();
      for (const DecompositionTerm& term : dec.terms) {
        terms.push_back(json{{"noise_pattern", term.noise_pattern},
                             {"classical_factor", term.classical_factor},
                             {"coherent_factor", term.coherent_factor},
                             {"value", term.value}});
      }
      out["rows"].push_back(json{{"pattern", dec.pattern},
                                 {"epsilon", dec.epsilon},
                                 {"terms", terms},
                                 {"term_sum", dec.term_sum},
                                 {"prefactor", dec.prefactor},
                                 {"total", dec.total},
                                 {"direct", dec.direct}});
    }
    sink.stream() << out.dump(2) << '\n';
  } else {
    sink.stream() << "pattern,term,classical_factor,coherent_factor,value\n";
    for (const HomogeneousDecomposition& dec : decompositions) {
      for (const DecompositionTerm& term : dec.terms) {
        sink.stream() << pattern_string(dec.pattern) << ','
                      << pattern_string(term.noise_pattern) << ','
                      << format_double(term.classical_factor) << ','
                      << format_double(term.coherent_factor) << ','
                      << format_double(term.value) << '\n';
      }
      sink.stream() << pattern_string(dec.pattern) << ",total,,,"
                    << format_double(dec.total) << '\n';
      sink.stream() << pattern_string(dec.pattern) << ",direct,,,"
                    << format_double(dec.direct) << '\n';
    }
  }
  return 0;
}

int run_validate(const std::optional<RunConfig>& config, const std::string& out,
                 const std::string& format) {
  std::vector<CheckResult> results;
  if (config) {
    const std::vector<CheckResult> extra = scenario_checks(config->scenario);
    results.insert(results.end(), extra.begin(), extra.end());
  }
  const std::vector<CheckResult> suite = run_validation_suite();
  results.insert(results.end(), suite.begin(), suite.end());
  const bool ok = all_passed(results);

  Sink sink(out);
  if (format == "csv") {
    sink.stream() << "check,passed,detail\n";
    for (const CheckResult& result : results) {
      sink.stream() << result.name << ',' << (result.passed ? "true" : "false")
                    << ',' << csv_quote(result.detail) << '\n';
    }
  } else {
    json report;
    report["command"] = "validate";
    report["checks"] = json::array();
    for (const CheckResult& result : results) {
      report["checks"].push_back(json{{"name", result.name},
                                      {"passed", result.passed},
                                      {"detail", result.detail}});
    }
    report["all_passed"] = ok;
    sink.stream() << report.dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squint: output statistics of squeezed light in linear interferometers"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  std::string format_flag;
  std::uint64_t seed_flag = 0;
  int max_total_flag = -1;

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* config_opt = cmd->add_option("--config", config_path,
                                       "Path to the JSON run configuration");
    if (config_required) config_opt->required();
    cmd->add_option("--out", out_flag, "Output path (default: stdout)");
    cmd->add_option("--format", format_flag, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", seed_flag, "Override the config seed");
    cmd->add_option("--max-total", max_total_flag,
                    "Override the config photon-count cap");
  };

  CLI::App* prob = app.add_subcommand("prob", "Photon-count probabilities");
  CLI::App* scan = app.add_subcommand("scan", "Delay-scan curves");
  CLI::App* threshold =
      app.add_subcommand("threshold", "Threshold-detector click probabilities");
  CLI::App* decompose =
      app.add_subcommand("decompose", "Classical/coherent decomposition terms");
  CLI::App* validate = app.add_subcommand("validate", "Run the self-check suite");
  add_common(prob, true);
  add_common(scan, true);
  add_common(threshold, true);
  add_common(decompose, true);
  add_common(validate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::optional<RunConfig> config;
    if (!config_path.empty()) config = load_run_config(config_path);
    if (config) {
      CLI::App* active = app.get_subcommands().front();
      if (active->count("--seed") > 0) config->seed = seed_flag;
      if (active->count("--max-total") > 0) config->max_total = max_total_flag;
      if (active->count("--out") > 0) config->out = out_flag;
      if (active->count("--format") > 0) config->format = format_flag;
    }

    if (prob->parsed()) return run_prob(*config);
    if (scan->parsed()) return run_scan(*config);
    if (threshold->parsed()) return run_threshold(*config);
    if (decompose->parsed()) return run_decompose(*config);
    if (validate->parsed()) {
      // The report defaults to JSON; --format csv selects the row form.
      std::string out = config ? config->out : std::string();
      std::string format = "json";
      if (validate->count("--out") > 0) out = out_flag;
      if (validate->count("--format") > 0) format = format_flag;
      return run_validate(config, out, format);
    }
    return 2;
  } catch (const ConfigError& error) {
    std::cerr << "squint: config error: " << error.what() << '\n';
    return 2;
  } catch (const ValidationError& error) {
    std::cerr << "squint: validation error: " << error.what() << '\n';
    return 3;
  } catch (const CapacityError& error) {
    std::cerr << "squint: capacity error: " << error.what() << '\n';
    return 4;
  } catch (const SeriesError& error) {
    std::cerr << "squint: internal series error: " << error.what() << '\n';
    return 3;
  } catch (const NumericFault& error) {
    std::cerr << "squint: numeric fault: " << error.what() << '\n';
    return 3;
  } catch (const std::exception& error) {
    std::cerr << "squint: unexpected error: " << error.what() << '\n';
    return 70;
  }
}
