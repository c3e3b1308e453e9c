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

#include "qhe/qhe.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "ergotropy.hpp"
#include "scenarios.hpp"
#include "sweep.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

qhe_status fail(qhe_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
qhe_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(QHE_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(QHE_ERROR_RUNTIME, e.what());
  } catch (...) {
    return fail(QHE_ERROR_RUNTIME, "unknown error");
  }
}

qhe::TwoQubitParams to_params(const qhe_two_qubit_params& p) {
  qhe::TwoQubitParams out;
  out.f1_ghz = p.f1_ghz;
  out.f2_ghz = p.f2_ghz;
  out.t1_mk = p.t1_mk;
  out.t2_mk = p.t2_mk;
  out.t0_mk = p.t0_mk;
  return out;
}

void fill_report(const qhe::CycleReport& r, qhe_cycle_report* out) {
  out->delta_e_uev[0] = r.delta_e_uev.at(0);
  out->delta_e_uev[1] = r.delta_e_uev.at(1);
  out->heat_uev[0] = r.heat_uev.at(0);
  out->heat_uev[1] = r.heat_uev.at(1);
  out->shannon_h_nats = r.shannon_h_nats;
  out->landauer_heat_uev = r.landauer_heat_uev;
  out->feedback_work_uev = r.feedback_work_uev;
  out->memory_work_uev = r.memory_work_uev;
  out->work_output_uev = r.work_output_uev;
  out->heat_intake_uev = r.heat_intake_uev;
  out->von_neumann_change_nats = r.von_neumann_change_nats;
  out->eta_landauer = r.eta_landauer.value_or(0.0);
  out->has_eta_landauer = r.eta_landauer.has_value() ? 1 : 0;
  out->eta_carnot = r.eta_carnot.value_or(0.0);
  out->has_eta_carnot = r.eta_carnot.has_value() ? 1 : 0;
  out->is_engine = r.is_engine ? 1 : 0;
}

qhe_status run_scenario_impl(const qhe_engine* engine, const char* scenario,
                             qhe_cycle_report* out_report, bool max_work);

}  // namespace

struct qhe_engine {
  qhe::TwoQubitParams params;
};

extern "C" {

const char* qhe_last_error(void) { return g_last_error.c_str(); }

void qhe_two_qubit_params_init(qhe_two_qubit_params* params) {
  if (params == nullptr) {
    return;
  }
  const qhe::TwoQubitParams defaults;
  params->f1_ghz = defaults.f1_ghz;
  params->f2_ghz = defaults.f2_ghz;
  params->t1_mk = defaults.t1_mk;
  params->t2_mk = defaults.t2_mk;
  params->t0_mk = defaults.t0_mk;
}

qhe_status qhe_engine_create(const qhe_two_qubit_params* params,
                             qhe_engine** out_engine) {
  if (params == nullptr || out_engine == nullptr) {
    return fail(QHE_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out_engine = nullptr;
  return guarded([&]() {
    // Validate eagerly so a bad handle can never be created.
    qhe::two_qubit_spec(to_params(*params));
    *out_engine = new qhe_engine{to_params(*params)};
    return QHE_OK;
  });
}

void qhe_engine_destroy(qhe_engine* engine) { delete engine; }

size_t qhe_scenario_count(void) { return qhe::kAllScenarios.size(); }

const char* qhe_scenario_id(size_t index) {
  if (index >= qhe::kAllScenarios.size()) {
    return nullptr;
  }
  return qhe::scenario_name(qhe::kAllScenarios[index]).data();
}

qhe_status qhe_engine_run_scenario(const qhe_engine* engine,
                                   const char* scenario,
                                   qhe_cycle_report* out_report) {
  return run_scenario_impl(engine, scenario, out_report, false);
}

qhe_status qhe_engine_run_scenario_max_work(const qhe_engine* engine,
                                            const char* scenario,
                                            qhe_cycle_report* out_report) {
  return run_scenario_impl(engine, scenario, out_report, true);
}

qhe_status qhe_sweep_to_file(const qhe_two_qubit_params* params,
                             const char* const* scenarios, size_t n_scenarios,
                             double t1_min_mk, double t1_max_mk, int steps,
                             const char* out_path) {
  if (params == nullptr || scenarios == nullptr || out_path == nullptr) {
    return fail(QHE_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&]() {
    qhe::SweepConfig config;
    config.params = to_params(*params);
    config.t1_min_mk = t1_min_mk;
    config.t1_max_mk = t1_max_mk;
    config.steps = steps;
    for (size_t i = 0; i < n_scenarios; ++i) {
      const auto s = qhe::scenario_from_name(
          scenarios[i] == nullptr ? "" : scenarios[i]);
      if (!s) {
        return fail(QHE_ERROR_INVALID_ARGUMENT,
                    std::string("unknown scenario '") +
                        (scenarios[i] == nullptr ? "(null)" : scenarios[i]) +
                        "'");
      }
      config.scenarios.push_back(*s);
    }
    const std::vector<qhe::SweepRow> rows = qhe::run_sweep(config);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      return fail(QHE_ERROR_RUNTIME,
                  std::string("cannot open '") + out_path + "' for writing");
    }
    qhe::write_sweep_csv(out, rows);
    out.flush();
    if (!out) {
      return fail(QHE_ERROR_RUNTIME,
                  std::string("failed writing '") + out_path + "'");
    }
    return QHE_OK;
  });
}

qhe_status qhe_verify(uint64_t seed, long long trials, const char* dims,
                      qhe_check_result* out_checks, size_t capacity,
                      size_t* out_count) {
  if (dims == nullptr || out_checks == nullptr || out_count == nullptr) {
    return fail(QHE_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out_count = 0;
  return guarded([&]() {
    qhe::VerifyConfig config;
    config.seed = seed;
    config.trials = trials;
    config.dims = qhe::parse_dims(dims);
    const qhe::VerifySummary summary = qhe::run_verify(config);
    if (summary.checks.size() > capacity) {
      return fail(QHE_ERROR_INVALID_ARGUMENT,
                  "capacity too small for " +
                      std::to_string(summary.checks.size()) + " checks");
    }
    for (size_t i = 0; i < summary.checks.size(); ++i) {
      const qhe::CheckCounter& c = summary.checks[i];
      std::snprintf(out_checks[i].name, sizeof(out_checks[i].name), "%s",
                    c.name.c_str());
      out_checks[i].trials = c.trials;
      out_checks[i].failures = c.failures;
    }
    *out_count = summary.checks.size();
    return QHE_OK;
  });
}

}  // extern "C"

namespace {

qhe_status run_scenario_impl(const qhe_engine* engine, const char* scenario,
                             qhe_cycle_report* out_report, bool max_work) {
  if (engine == nullptr || scenario == nullptr || out_report == nullptr) {
    return fail(QHE_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&]() {
    const auto s = qhe::scenario_from_name(scenario);
    if (!s) {
      return fail(QHE_ERROR_INVALID_ARGUMENT,
                  std::string("unknown scenario '") + scenario + "'");
    }
    const qhe::EngineSpec spec = qhe::two_qubit_spec(engine->params);
    const qhe::MeasurementSet mset = qhe::scenario_projectors(*s);
    const qhe::MeasurementRecord record =
        qhe::measure(qhe::gibbs_product_state(spec), mset);
    const qhe::FeedbackPolicy policy =
        max_work ? qhe::max_work_policy(record, qhe::total_hamiltonian(spec))
                 : qhe::scenario_policy(*s, record);
    fill_report(qhe::evaluate_cycle(spec, mset, policy), out_report);
    return QHE_OK;
  });
}

}  // namespace
