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

#include "sweep.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ergotropy.hpp"

namespace qhe {

namespace {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.scenarios.empty()) {
    throw std::invalid_argument("run_sweep: no scenarios selected");
  }
  if (config.steps < 2) {
    throw std::invalid_argument("run_sweep: need at least 2 steps");
  }
  if (!(config.t1_min_mk > 0.0) || !(config.t1_min_mk < config.t1_max_mk)) {
    throw std::invalid_argument("run_sweep: need 0 < t1_min < t1_max");
  }
  const double step =
      (config.t1_max_mk - config.t1_min_mk) / (config.steps - 1);

  std::vector<SweepRow> rows;
  rows.reserve(config.scenarios.size() * config.steps);
  for (Scenario scenario : config.scenarios) {
    const MeasurementSet mset = scenario_projectors(scenario);
    for (int j = 0; j < config.steps; ++j) {
      TwoQubitParams params = config.params;
      params.t1_mk = config.t1_min_mk + j * step;
      const EngineSpec spec = two_qubit_spec(params);
      const MeasurementRecord record =
          measure(gibbs_product_state(spec), mset);
      const FeedbackPolicy policy =
          max_work_policy(record, total_hamiltonian(spec));
      rows.push_back(
          SweepRow{scenario, params.t1_mk, evaluate_cycle(spec, mset, policy)});
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "scenario,T1_mK,W_out_ueV,Q0L_ueV,Q1_ueV,Q2_ueV,h_nats,eta_LW,eta_C"
      << '\n';
  for (const SweepRow& row : rows) {
    const CycleReport& r = row.report;
    out << scenario_name(row.scenario) << ',' << format_number(row.t1_mk)
        << ',' << format_number(r.work_output_uev) << ','
        << format_number(r.landauer_heat_uev) << ','
        << format_number(r.heat_uev.at(0)) << ','
        << format_number(r.heat_uev.at(1)) << ','
        << format_number(r.shannon_h_nats) << ','
        << (r.eta_landauer ? format_number(*r.eta_landauer) : std::string())
        << ','
        << (r.eta_carnot ? format_number(*r.eta_carnot) : std::string())
        << '\n';
  }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_sweep_csv(out, rows);
  return out.str();
}

}  // namespace qhe
