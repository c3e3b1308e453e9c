// Copyright 2026 The qhe Authors
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

// Command-line front end. Talks to the engine exclusively through the C API
// of the qhe shared library. Exit codes: 0 success, 1 validation error,
// 2 runtime failure.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhe/qhe.h"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Plain "key = value" lines with '#' comments and dotted keys.
std::map<std::string, double> parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ": cannot open config file");
  }
  std::map<std::string, double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    if (values.count(key) != 0) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": duplicate key '" + key + "'");
    }
    std::size_t used = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(value, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != value.size()) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": not a number: '" + value + "'");
    }
    values[key] = parsed;
  }
  return values;
}

qhe_two_qubit_params load_params(const std::string& path) {
  const std::map<std::string, double> values = parse_config(path);
  const std::vector<std::string> keys = {
      "qubit1.frequency_ghz", "qubit1.temperature_mk", "qubit2.frequency_ghz",
      "qubit2.temperature_mk", "memory.temperature_mk"};
  for (const std::string& key : keys) {
    if (values.count(key) == 0) {
      throw ConfigError(path + ": missing key '" + key + "'");
    }
  }
  for (const auto& [key, value] : values) {
    bool known = false;
    for (const std::string& k : keys) {
      known = known || k == key;
    }
    if (!known) {
      throw ConfigError(path + ": unknown key '" + key + "'");
    }
  }
  qhe_two_qubit_params params;
  params.f1_ghz = values.at("qubit1.frequency_ghz");
  params.t1_mk = values.at("qubit1.temperature_mk");
  params.f2_ghz = values.at("qubit2.frequency_ghz");
  params.t2_mk = values.at("qubit2.temperature_mk");
  params.t0_mk = values.at("memory.temperature_mk");
  return params;
}

int status_to_exit(qhe_status status) {
  switch (status) {
    case QHE_OK:
      return 0;
    case QHE_ERROR_INVALID_ARGUMENT:
      return kExitValidation;
    default:
      return kExitRuntime;
  }
}

int check(qhe_status status) {
  if (status != QHE_OK) {
    std::fprintf(stderr, "error: %s\n", qhe_last_error());
  }
  return status_to_exit(status);
}

void print_field(const char* name, double value, const char* unit) {
  std::printf("%-22s % .12g %s\n", name, value, unit);
}

int run_cycle(const std::string& config_path, const std::string& scenario,
              std::optional<double> t1_mk) {
  qhe_two_qubit_params params = load_params(config_path);
  if (t1_mk) {
    params.t1_mk = *t1_mk;
  }
  qhe_engine* engine = nullptr;
  if (const int rc = check(qhe_engine_create(&params, &engine)); rc != 0) {
    return rc;
  }
  qhe_cycle_report report;
  const qhe_status status =
      qhe_engine_run_scenario(engine, scenario.c_str(), &report);
  qhe_engine_destroy(engine);
  if (const int rc = check(status); rc != 0) {
    return rc;
  }

  std::printf("%-22s %s\n", "scenario", scenario.c_str());
  print_field("f1", params.f1_ghz, "GHz");
  print_field("f2", params.f2_ghz, "GHz");
  print_field("T1", params.t1_mk, "mK");
  print_field("T2", params.t2_mk, "mK");
  print_field("T0", params.t0_mk, "mK");
  print_field("delta_E1", report.delta_e_uev[0], "ueV");
  print_field("delta_E2", report.delta_e_uev[1], "ueV");
  print_field("Q1", report.heat_uev[0], "ueV");
  print_field("Q2", report.heat_uev[1], "ueV");
  print_field("shannon_h", report.shannon_h_nats, "nats");
  print_field("Q0_landauer", report.landauer_heat_uev, "ueV");
  print_field("W_fc", report.feedback_work_uev, "ueV");
  print_field("W_m_landauer", report.memory_work_uev, "ueV");
  print_field("W_out", report.work_output_uev, "ueV");
  print_field("Q_in", report.heat_intake_uev, "ueV");
  print_field("delta_vn", report.von_neumann_change_nats, "nats");
  if (report.has_eta_landauer) {
    print_field("eta_L", report.eta_landauer, "");
  } else {
    std::printf("%-22s  undefined\n", "eta_L");
  }
  if (report.has_eta_carnot) {
    print_field("eta_C", report.eta_carnot, "");
  } else {
    std::printf("%-22s  undefined\n", "eta_C");
  }
  std::printf("%-22s %s\n", "regime",
              report.is_engine ? "engine" : "non-engine");
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& scenarios,
              double t1_min, double t1_max, int steps,
              const std::string& out_path) {
  const qhe_two_qubit_params params = load_params(config_path);
  std::vector<std::string> names;
  std::stringstream stream(scenarios);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) {
      names.push_back(token);
    }
  }
  std::vector<const char*> pointers;
  pointers.reserve(names.size());
  for (const std::string& name : names) {
    pointers.push_back(name.c_str());
  }
  const qhe_status status =
      qhe_sweep_to_file(&params, pointers.data(), pointers.size(), t1_min,
                        t1_max, steps, out_path.c_str());
  if (const int rc = check(status); rc != 0) {
    return rc;
  }
  std::printf("wrote %s (%zu scenarios x %d points)\n", out_path.c_str(),
              pointers.size(), steps);
  return 0;
}

int run_verify(std::uint64_t seed, long long trials, const std::string& dims) {
  qhe_check_result checks[32];
  size_t count = 0;
  const qhe_status status =
      qhe_verify(seed, trials, dims.c_str(), checks, 32, &count);
  if (const int rc = check(status); rc != 0) {
    return rc;
  }
  std::printf("verify seed=%" PRIu64 " trials=%lld dims=%s\n", seed, trials,
              dims.c_str());
  long long total_failures = 0;
  for (size_t i = 0; i < count; ++i) {
    std::printf("  %-27s trials=%lld failures=%lld\n", checks[i].name,
                checks[i].trials, checks[i].failures);
    total_failures += checks[i].failures;
  }
  std::printf("total failures: %lld\n", total_failures);
  return total_failures == 0 ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feedback-controlled two-stroke quantum heat engine simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario;
  std::optional<double> t1_override;
  auto* cycle = app.add_subcommand(
      "cycle", "Evaluate one engine cycle and print the full report");
  cycle->add_option("--config", config_path, "Engine config file")->required();
  cycle->add_option("--scenario", scenario,
                    "One of: e-fine, e-coarse, bell-fine, bell-coarse, "
                    "extra-coarse")
      ->required();
  cycle->add_option("--t1", t1_override,
                    "Override qubit1.temperature_mk from the config");

  std::string sweep_scenarios =
      "e-fine,e-coarse,bell-fine,bell-coarse,extra-coarse";
  double t1_min = 10.0;
  double t1_max = 500.0;
  int steps = 200;
  std::string out_path;
  auto* sweep = app.add_subcommand(
      "sweep", "Sweep T1 and write per-scenario engine curves as CSV");
  sweep->add_option("--config", config_path, "Engine config file")->required();
  sweep->add_option("--scenarios", sweep_scenarios,
                    "Comma-separated scenario list");
  sweep->add_option("--t1-min", t1_min, "Lowest T1 in mK");
  sweep->add_option("--t1-max", t1_max, "Highest T1 in mK");
  sweep->add_option("--steps", steps, "Number of grid points (>= 2)");
  sweep->add_option("--out", out_path, "Output CSV path")->required();

  std::uint64_t seed = 42;
  long long trials = 10000;
  std::string dims = "2x2,2x3,2x2x2";
  auto* verify = app.add_subcommand(
      "verify", "Run the randomized verification battery");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--trials", trials, "Number of randomized instances");
  verify->add_option("--dims", dims,
                     "Partition dimension signatures, e.g. 2x2,2x3,2x2x2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (cycle->parsed()) {
      return run_cycle(config_path, scenario, t1_override);
    }
    if (sweep->parsed()) {
      return run_sweep(config_path, sweep_scenarios, t1_min, t1_max, steps,
                       out_path);
    }
    return run_verify(seed, trials, dims);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
}
