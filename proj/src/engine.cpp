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

#include "engine.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qhe {

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double trace_dev = std::abs(op_.mat().trace().real() - 1.0) +
                           std::abs(op_.mat().trace().imag());
  if (trace_dev > 1e-9) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << trace_dev;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op_.mat(),
                                               Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-10) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << min_eig;
    throw std::invalid_argument(msg.str());
  }
}

Partition::Partition(HermitianOperator hamiltonian, double temp_mk)
    : local_hamiltonian(std::move(hamiltonian)), temperature_mk(temp_mk) {
  if (!(temperature_mk > 0.0)) {
    throw std::invalid_argument("Partition: temperature must be positive");
  }
  if (local_hamiltonian.dim() < 2) {
    throw std::invalid_argument("Partition: local dimension must be >= 2");
  }
}

EngineSpec::EngineSpec(std::vector<Partition> partitions,
                       double memory_temperature_mk)
    : partitions_(std::move(partitions)),
      memory_temperature_mk_(memory_temperature_mk) {
  if (partitions_.empty()) {
    throw std::invalid_argument("EngineSpec: need at least one partition");
  }
  if (!(memory_temperature_mk_ > 0.0)) {
    throw std::invalid_argument(
        "EngineSpec: memory temperature must be positive");
  }
  dim_ = 1;
  for (const Partition& p : partitions_) {
    dim_ *= p.dim();
  }
  // Embed each local Hamiltonian as I x ... x H_i x ... x I.
  embedded_.reserve(partitions_.size());
  for (std::size_t i = 0; i < partitions_.size(); ++i) {
    Matrix acc = Matrix::Identity(1, 1);
    for (std::size_t j = 0; j < partitions_.size(); ++j) {
      const int dj = partitions_[j].dim();
      acc = kron(acc, j == i ? partitions_[j].local_hamiltonian.mat()
                             : Matrix::Identity(dj, dj));
    }
    embedded_.push_back(std::move(acc));
  }
}

MeasurementSet::MeasurementSet(std::vector<HermitianOperator> projectors)
    : projectors_(std::move(projectors)) {
  if (projectors_.empty()) {
    throw std::invalid_argument("MeasurementSet: empty projector list");
  }
  const int d = projectors_.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  int total_rank = 0;
  for (std::size_t a = 0; a < projectors_.size(); ++a) {
    const Matrix& p = projectors_[a].mat();
    if (p.rows() != d) {
      throw std::invalid_argument("MeasurementSet: mixed dimensions");
    }
    if (max_abs(p * p - p) > kStructuralTol) {
      throw std::invalid_argument("MeasurementSet: projector not idempotent");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (max_abs(p * projectors_[b].mat()) > kStructuralTol) {
        throw std::invalid_argument(
            "MeasurementSet: projectors not mutually orthogonal");
      }
    }
    const double tr = p.trace().real();
    const int rank = static_cast<int>(std::lround(tr));
    if (std::abs(tr - rank) > kStructuralTol || rank < 1) {
      throw std::invalid_argument("MeasurementSet: non-integral rank");
    }
    ranks_.push_back(rank);
    total_rank += rank;
    sum += p;
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > kStructuralTol) {
    throw std::invalid_argument("MeasurementSet: projectors do not sum to I");
  }
  if (total_rank != d) {
    throw std::invalid_argument("MeasurementSet: ranks do not sum to dim");
  }
}

bool MeasurementSet::is_fine_grain() const {
  for (int g : ranks_) {
    if (g != 1) {
      return false;
    }
  }
  return true;
}

FeedbackPolicy::FeedbackPolicy(std::vector<UnitaryMatrix> unitaries)
    : unitaries_(std::move(unitaries)) {
  if (unitaries_.empty()) {
    throw std::invalid_argument("FeedbackPolicy: empty unitary list");
  }
}

HermitianOperator total_hamiltonian(const EngineSpec& spec) {
  Matrix h = Matrix::Zero(spec.dim(), spec.dim());
  for (int i = 0; i < spec.partition_count(); ++i) {
    h += spec.embedded_hamiltonian(i);
  }
  return HermitianOperator(std::move(h));
}

DensityMatrix gibbs_product_state(const EngineSpec& spec) {
  Matrix rho = Matrix::Identity(1, 1);
  for (const Partition& p : spec.partitions()) {
    const Spectrum s = eig_hermitian(p.local_hamiltonian);
    const double e_min = s.eigenvalues(0);
    const double beta = p.beta();
    RealVector weights(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
      weights(k) = std::exp(-beta * (s.eigenvalues(k) - e_min));
    }
    weights /= weights.sum();
    const Matrix factor = s.eigenvectors *
                          weights.cast<Complex>().asDiagonal() *
                          s.eigenvectors.adjoint();
    rho = kron(rho, factor);
  }
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

MeasurementRecord measure(const DensityMatrix& rho, const MeasurementSet& m) {
  if (rho.dim() != m.dim()) {
    std::ostringstream msg;
    msg << "measure: state dim " << rho.dim() << " != measurement dim "
        << m.dim();
    throw std::invalid_argument(msg.str());
  }
  MeasurementRecord record;
  double total = 0.0;
  for (const HermitianOperator& proj : m.projectors()) {
    Matrix collapsed = proj.mat() * rho.mat() * proj.mat();
    double q = collapsed.trace().real();
    if (q < -1e-12) {
      std::ostringstream msg;
      msg << "measure: outcome probability " << q << " below -1e-12";
      throw std::runtime_error(msg.str());
    }
    q = std::max(q, 0.0);
    total += q;
    record.probabilities.push_back(q);
    if (q >= kProbabilityFloor) {
      collapsed /= q;
      collapsed = 0.5 * (collapsed + collapsed.adjoint().eval());
      record.post_states.emplace_back(DensityMatrix(std::move(collapsed)));
    } else {
      record.post_states.emplace_back(std::nullopt);
    }
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "measure: outcome probabilities sum to " << total;
    throw std::runtime_error(msg.str());
  }
  return record;
}

DensityMatrix apply_feedback(const MeasurementRecord& record,
                             const FeedbackPolicy& policy) {
  if (policy.outcome_count() != record.outcome_count()) {
    std::ostringstream msg;
    msg << "apply_feedback: policy has " << policy.outcome_count()
        << " unitaries for " << record.outcome_count() << " outcomes";
    throw std::invalid_argument(msg.str());
  }
  Matrix out;
  bool initialized = false;
  for (int a = 0; a < record.outcome_count(); ++a) {
    if (!record.post_states[a].has_value()) {
      continue;
    }
    const Matrix& u = policy.unitaries()[a].mat();
    const Matrix& rho_a = record.post_states[a]->mat();
    if (u.rows() != rho_a.rows()) {
      throw std::invalid_argument("apply_feedback: dimension mismatch");
    }
    Matrix term = record.probabilities[a] * (u * rho_a * u.adjoint());
    if (!initialized) {
      out = std::move(term);
      initialized = true;
    } else {
      out += term;
    }
  }
  if (!initialized) {
    throw std::runtime_error("apply_feedback: no outcome carries a state");
  }
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix(std::move(out));
}

std::vector<double> energy_changes(const EngineSpec& spec,
                                   const DensityMatrix& rho,
                                   const DensityMatrix& rho_prime) {
  if (rho.dim() != spec.dim() || rho_prime.dim() != spec.dim()) {
    throw std::invalid_argument("energy_changes: dimension mismatch");
  }
  std::vector<double> delta(spec.partition_count());
  for (int i = 0; i < spec.partition_count(); ++i) {
    const Matrix& h = spec.embedded_hamiltonian(i);
    delta[i] = real_trace_product(h, rho_prime.mat()) -
               real_trace_product(h, rho.mat());
  }
  return delta;
}

std::vector<double> heats(const std::vector<double>& delta_e_uev) {
  std::vector<double> q(delta_e_uev.size());
  for (std::size_t i = 0; i < delta_e_uev.size(); ++i) {
    q[i] = -delta_e_uev[i];
  }
  return q;
}

double shannon_entropy(const std::vector<double>& probabilities) {
  double total = 0.0;
  double h = 0.0;
  for (double q : probabilities) {
    if (q < 0.0) {
      throw std::invalid_argument("shannon_entropy: negative probability");
    }
    total += q;
    if (q > 0.0) {
      h -= q * std::log(q);
    }
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "shannon_entropy: probabilities sum to " << total;
    throw std::invalid_argument(msg.str());
  }
  // A lone probability can exceed 1 by rounding, driving the sum a few ulp
  // below zero; the information itself is nonnegative.
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.mat(),
                                               Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double r = solver.eigenvalues()(k);
    if (r > 0.0) {
      h -= r * std::log(r);
    }
  }
  return h;
}

double landauer_heat(double shannon_nats, double t0_mk) {
  return -thermal_energy_uev(t0_mk) * shannon_nats;
}

double heat_intake(const std::vector<double>& heats_uev) {
  double q_in = 0.0;
  for (double q : heats_uev) {
    q_in += std::max(q, 0.0);
  }
  return q_in;
}

std::optional<double> landauer_efficiency(const std::vector<double>& heats_uev,
                                          double shannon_nats, double t0_mk) {
  const double q_in = heat_intake(heats_uev);
  if (q_in <= 1e-14) {
    return std::nullopt;
  }
  double q_sum = 0.0;
  for (double q : heats_uev) {
    q_sum += q;
  }
  return q_sum / q_in - thermal_energy_uev(t0_mk) * shannon_nats / q_in;
}

std::optional<double> carnot_efficiency(
    const std::vector<double>& heats_with_memory_uev,
    const std::vector<double>& temperatures_mk) {
  if (heats_with_memory_uev.size() != temperatures_mk.size()) {
    throw std::invalid_argument("carnot_efficiency: size mismatch");
  }
  std::optional<double> t_min;
  std::optional<double> t_max;
  for (std::size_t i = 0; i < heats_with_memory_uev.size(); ++i) {
    const double q = heats_with_memory_uev[i];
    const double t = temperatures_mk[i];
    if (q < -1e-14) {
      t_min = t_min ? std::min(*t_min, t) : t;
    } else if (q > 1e-14) {
      t_max = t_max ? std::max(*t_max, t) : t;
    }
  }
  if (!t_min || !t_max) {
    return std::nullopt;
  }
  return 1.0 - *t_min / *t_max;
}

CycleReport evaluate_cycle(const EngineSpec& spec, const MeasurementSet& m,
                           const FeedbackPolicy& policy) {
  const DensityMatrix rho = gibbs_product_state(spec);
  const MeasurementRecord record = measure(rho, m);
  const DensityMatrix rho_prime = apply_feedback(record, policy);
  const HermitianOperator h_total = total_hamiltonian(spec);

  CycleReport report;
  report.delta_e_uev = energy_changes(spec, rho, rho_prime);
  report.heat_uev = heats(report.delta_e_uev);
  report.shannon_h_nats = shannon_entropy(record.probabilities);
  report.landauer_heat_uev =
      landauer_heat(report.shannon_h_nats, spec.memory_temperature_mk());
  report.feedback_work_uev =
      real_trace_product(h_total.mat(), rho_prime.mat()) -
      real_trace_product(h_total.mat(), rho.mat());
  report.memory_work_uev = -report.landauer_heat_uev;
  report.work_output_uev =
      -(report.feedback_work_uev + report.memory_work_uev);
  report.heat_intake_uev = heat_intake(report.heat_uev);
  report.von_neumann_change_nats =
      von_neumann_entropy(rho_prime) - von_neumann_entropy(rho);
  report.eta_landauer =
      landauer_efficiency(report.heat_uev, report.shannon_h_nats,
                          spec.memory_temperature_mk());

  std::vector<double> q_full{report.landauer_heat_uev};
  std::vector<double> temps{spec.memory_temperature_mk()};
  for (int i = 0; i < spec.partition_count(); ++i) {
    q_full.push_back(report.heat_uev[i]);
    temps.push_back(spec.partitions()[i].temperature_mk);
  }
  report.eta_carnot = carnot_efficiency(q_full, temps);
  report.is_engine = report.work_output_uev > 0.0;

  // First-law closure: the work output must equal the total heat ceded by
  // all N+1 baths.
  double q_total = report.landauer_heat_uev;
  for (double q : report.heat_uev) {
    q_total += q;
  }
  if (std::abs(report.work_output_uev - q_total) > 1e-9) {
    throw std::runtime_error("evaluate_cycle: first-law closure violated");
  }
  return report;
}

}  // namespace qhe
