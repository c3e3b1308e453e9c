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

#ifndef QHE_SWEEP_HPP
#define QHE_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "scenarios.hpp"

namespace qhe {

/// Linear T1 grid, inclusive of both endpoints; t1_mk in params is ignored.
struct SweepConfig {
  TwoQubitParams params;
  double t1_min_mk = 10.0;
  double t1_max_mk = 500.0;
  int steps = 200;
  std::vector<Scenario> scenarios;
};

struct SweepRow {
  Scenario scenario;
  double t1_mk;
  CycleReport report;
};

/// One row per (scenario, T1), scenario-major then ascending T1. Every row
/// is evaluated under the work-maximizing feedback policy, so the efficiency
/// column is the max-work Landauer efficiency.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Fixed schema:
///   scenario,T1_mK,W_out_ueV,Q0L_ueV,Q1_ueV,Q2_ueV,h_nats,eta_LW,eta_C
/// Numbers carry 12 significant digits; undefined efficiencies are empty
/// fields. Byte-identical across runs for identical configs.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace qhe

#endif  // QHE_SWEEP_HPP
