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

#ifndef QHE_ENGINE_HPP
#define QHE_ENGINE_HPP

#include <optional>
#include <vector>

#include "linalg.hpp"

namespace qhe {

// Units: energies in ueV, temperatures in mK, frequencies in GHz,
// entropies in nats. CODATA values.
inline constexpr double kBoltzmannUevPerKelvin = 86.17333262;
inline constexpr double kPlanckUevPerGhz = 4.135667696;

/// k_B T in ueV for a temperature in mK.
inline double thermal_energy_uev(double temperature_mk) {
  return kBoltzmannUevPerKelvin * temperature_mk * 1e-3;
}

/// beta = 1/(k_B T) in 1/ueV for a temperature in mK.
inline double inverse_thermal_energy(double temperature_mk) {
  return 1.0 / thermal_energy_uev(temperature_mk);
}

// Outcomes with probability below this threshold carry no post state.
inline constexpr double kProbabilityFloor = 1e-14;

/// Unit-trace (to 1e-9) positive semidefinite (eigenvalues >= -1e-10)
/// Hermitian matrix, checked at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op);
  explicit DensityMatrix(Matrix m) : DensityMatrix(HermitianOperator(std::move(m))) {}

  const HermitianOperator& op() const { return op_; }
  const Matrix& mat() const { return op_.mat(); }
  int dim() const { return op_.dim(); }

 private:
  HermitianOperator op_;
};

/// One partition of the working substance: its local Hamiltonian and the
/// temperature of the bath it rethermalizes with.
struct Partition {
  Partition(HermitianOperator hamiltonian, double temp_mk);

  HermitianOperator local_hamiltonian;
  double temperature_mk;

  double beta() const { return inverse_thermal_energy(temperature_mk); }
  int dim() const { return local_hamiltonian.dim(); }
};

/// The full machine: N partitions plus the memory bath temperature.
/// Immutable after construction; embedded per-partition Hamiltonians
/// (I x ... x H_i x ... x I) are precomputed.
class EngineSpec {
 public:
  EngineSpec(std::vector<Partition> partitions, double memory_temperature_mk);

  const std::vector<Partition>& partitions() const { return partitions_; }
  double memory_temperature_mk() const { return memory_temperature_mk_; }
  int partition_count() const { return static_cast<int>(partitions_.size()); }
  int dim() const { return dim_; }

  /// I x ... x H_i x ... x I on the full space.
  const Matrix& embedded_hamiltonian(int i) const { return embedded_.at(i); }

 private:
  std::vector<Partition> partitions_;
  double memory_temperature_mk_;
  int dim_;
  std::vector<Matrix> embedded_;
};

/// Complete orthogonal projector family on the full space. Construction
/// checks idempotence, mutual orthogonality and completeness to 1e-10.
class MeasurementSet {
 public:
  explicit MeasurementSet(std::vector<HermitianOperator> projectors);

  const std::vector<HermitianOperator>& projectors() const { return projectors_; }
  const std::vector<int>& ranks() const { return ranks_; }
  int outcome_count() const { return static_cast<int>(projectors_.size()); }
  int dim() const { return projectors_.front().dim(); }
  bool is_fine_grain() const;

 private:
  std::vector<HermitianOperator> projectors_;
  std::vector<int> ranks_;
};

/// One unitary per measurement outcome, index-aligned with the set.
class FeedbackPolicy {
 public:
  explicit FeedbackPolicy(std::vector<UnitaryMatrix> unitaries);

  const std::vector<UnitaryMatrix>& unitaries() const { return unitaries_; }
  int outcome_count() const { return static_cast<int>(unitaries_.size()); }

 private:
  std::vector<UnitaryMatrix> unitaries_;
};

/// Outcome probabilities and post-measurement states. Outcomes below the
/// probability floor carry no state.
struct MeasurementRecord {
  std::vector<double> probabilities;
  std::vector<std::optional<DensityMatrix>> post_states;

  int outcome_count() const { return static_cast<int>(probabilities.size()); }
};

/// Per-cycle bookkeeping. All energies in ueV, entropies in nats.
struct CycleReport {
  std::vector<double> delta_e_uev;   // per-partition energy change
  std::vector<double> heat_uev;      // Q_i = -delta_E_i
  double shannon_h_nats = 0.0;       // outcome-distribution information
  double landauer_heat_uev = 0.0;    // memory-bath heat at saturation, <= 0
  double feedback_work_uev = 0.0;    // energy injected by the feedback step
  double memory_work_uev = 0.0;      // = -landauer_heat_uev
  double work_output_uev = 0.0;
  double heat_intake_uev = 0.0;
  double von_neumann_change_nats = 0.0;
  std::optional<double> eta_landauer;
  std::optional<double> eta_carnot;
  bool is_engine = false;            // work_output_uev > 0
};

/// Sum of embedded local Hamiltonians.
HermitianOperator total_hamiltonian(const EngineSpec& spec);

/// Tensor product of per-partition thermal states. Each factor is computed
/// from exp(-beta (H_i - e_min)) and normalized, so no overflow for any
/// positive temperature.
DensityMatrix gibbs_product_state(const EngineSpec& spec);

/// Projective measurement: q_a = tr(P_a rho P_a) and the collapsed states.
MeasurementRecord measure(const DensityMatrix& rho, const MeasurementSet& m);

/// Non-post-selected state after feedback: sum_a q_a U_a rho_a U_a^dag.
DensityMatrix apply_feedback(const MeasurementRecord& record,
                             const FeedbackPolicy& policy);

/// Per-partition energy change tr(H_i (rho' - rho)).
std::vector<double> energy_changes(const EngineSpec& spec,
                                   const DensityMatrix& rho,
                                   const DensityMatrix& rho_prime);

/// Heat ceded by each bath during rethermalization: Q_i = -delta_E_i.
std::vector<double> heats(const std::vector<double>& delta_e_uev);

/// -sum q ln q in nats, with 0 ln 0 := 0. Requires q >= 0 summing to 1
/// within 1e-9.
double shannon_entropy(const std::vector<double>& probabilities);

/// -tr rho ln rho in nats; eigenvalues within rounding of zero contribute 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Memory-bath heat when the erasure bound is saturated: -k_B T0 h, in ueV.
double landauer_heat(double shannon_nats, double t0_mk);

/// Positive-part sum of the working-substance heats (memory bath excluded).
double heat_intake(const std::vector<double>& heats_uev);

/// sum(Q_i)/Q_in - k_B T0 h / Q_in; nullopt when Q_in <= 1e-14.
std::optional<double> landauer_efficiency(const std::vector<double>& heats_uev,
                                          double shannon_nats, double t0_mk);

/// 1 - T_min/T_max over heat-receiving and heat-donating baths. Inputs
/// include the memory bath (index 0). Baths with |Q| <= 1e-14 belong to
/// neither set; nullopt when either set is empty.
std::optional<double> carnot_efficiency(
    const std::vector<double>& heats_with_memory_uev,
    const std::vector<double>& temperatures_mk);

/// Full cycle: Gibbs preparation, measurement, feedback, and all heats,
/// works, entropies and efficiencies.
CycleReport evaluate_cycle(const EngineSpec& spec, const MeasurementSet& m,
                           const FeedbackPolicy& policy);

}  // namespace qhe

#endif  // QHE_ENGINE_HPP
