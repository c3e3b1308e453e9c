/* Copyright 2026 The qhe Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the qhe shared library: a simulator for feedback-controlled
 * two-stroke quantum heat engines with a measurement memory. Handles are
 * opaque; every fallible call returns a status code and leaves a human
 * readable message in qhe_last_error() on failure.
 *
 * Units: energies in ueV, temperatures in mK, frequencies in GHz, entropies
 * in nats.
 */

#ifndef QHE_QHE_H
#define QHE_QHE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QHE_API __declspec(dllexport)
#else
#define QHE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qhe_status {
  QHE_OK = 0,
  QHE_ERROR_INVALID_ARGUMENT = 1,
  QHE_ERROR_RUNTIME = 2
} qhe_status;

/* Message describing the most recent failure on this thread. */
QHE_API const char* qhe_last_error(void);

/* Two resonant qubits, each with its own bath, plus the memory bath. */
typedef struct qhe_two_qubit_params {
  double f1_ghz;
  double f2_ghz;
  double t1_mk;
  double t2_mk;
  double t0_mk;
} qhe_two_qubit_params;

/* Fills in the stock parameters: f1 = f2 = 5 GHz, T1 = T2 = 150 mK,
 * T0 = 80 mK. */
QHE_API void qhe_two_qubit_params_init(qhe_two_qubit_params* params);

/* Opaque two-qubit engine configured with fixed parameters. */
typedef struct qhe_engine qhe_engine;

QHE_API qhe_status qhe_engine_create(const qhe_two_qubit_params* params,
                                     qhe_engine** out_engine);
QHE_API void qhe_engine_destroy(qhe_engine* engine);

/* Per-cycle bookkeeping for a two-qubit engine. */
typedef struct qhe_cycle_report {
  double delta_e_uev[2];          /* per-qubit energy change */
  double heat_uev[2];             /* Q_i = -delta_E_i */
  double shannon_h_nats;          /* outcome information */
  double landauer_heat_uev;       /* memory-bath heat at saturation, <= 0 */
  double feedback_work_uev;
  double memory_work_uev;
  double work_output_uev;
  double heat_intake_uev;
  double von_neumann_change_nats;
  double eta_landauer;            /* valid iff has_eta_landauer */
  int has_eta_landauer;
  double eta_carnot;              /* valid iff has_eta_carnot */
  int has_eta_carnot;
  int is_engine;                  /* nonzero iff work_output_uev > 0 */
} qhe_cycle_report;

/* Scenario identifiers accepted below: "e-fine", "e-coarse", "bell-fine",
 * "bell-coarse", "extra-coarse". */
QHE_API size_t qhe_scenario_count(void);
QHE_API const char* qhe_scenario_id(size_t index);

/* Runs one cycle with the scenario's published feedback unitaries. */
QHE_API qhe_status qhe_engine_run_scenario(const qhe_engine* engine,
                                           const char* scenario,
                                           qhe_cycle_report* out_report);

/* Runs one cycle under the work-maximizing feedback policy instead. */
QHE_API qhe_status qhe_engine_run_scenario_max_work(const qhe_engine* engine,
                                                    const char* scenario,
                                                    qhe_cycle_report* out_report);

/* Sweeps T1 over a linear inclusive grid and writes one CSV file with
 * schema scenario,T1_mK,W_out_ueV,Q0L_ueV,Q1_ueV,Q2_ueV,h_nats,eta_LW,eta_C
 * (12 significant digits, undefined efficiencies empty, rows scenario-major
 * then ascending T1). Every row uses the work-maximizing policy. t1_mk in
 * params is ignored. Output is byte-identical for identical inputs. */
QHE_API qhe_status qhe_sweep_to_file(const qhe_two_qubit_params* params,
                                     const char* const* scenarios,
                                     size_t n_scenarios, double t1_min_mk,
                                     double t1_max_mk, int steps,
                                     const char* out_path);

/* One named check of the randomized verification battery. */
typedef struct qhe_check_result {
  char name[48];
  long long trials;
  long long failures;
} qhe_check_result;

/* Runs the randomized verification battery: `trials` instances drawn from
 * sub-streams of `seed`, with partition dimension signatures given as e.g.
 * "2x2,2x3,2x2x2" (each dimension >= 2, product <= 16). Writes up to
 * `capacity` check results and stores the total count in *out_count;
 * returns QHE_ERROR_INVALID_ARGUMENT if capacity is too small. Identical
 * inputs produce identical results. */
QHE_API qhe_status qhe_verify(uint64_t seed, long long trials,
                              const char* dims, qhe_check_result* out_checks,
                              size_t capacity, size_t* out_count);

#ifdef __cplusplus
}
#endif

#endif /* QHE_QHE_H */
