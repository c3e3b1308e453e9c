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

#include "ergotropy.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qhe {

PassiveTransform passive_transform(const DensityMatrix& rho,
                                   const HermitianOperator& hamiltonian) {
  if (rho.dim() != hamiltonian.dim()) {
    throw std::invalid_argument("passive_transform: dimension mismatch");
  }
  const int d = rho.dim();
  const Spectrum state = eig_hermitian(rho.op());
  const Spectrum energy = eig_hermitian(hamiltonian);

  // Largest population onto lowest energy level: U = sum_k |e_k><r_k| with
  // populations taken in descending order.
  Matrix u = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    u += energy.eigenvectors.col(k) *
         state.eigenvectors.col(d - 1 - k).adjoint();
  }
  UnitaryMatrix unitary(std::move(u));

  Matrix passive = unitary.mat() * rho.mat() * unitary.mat().adjoint();
  passive = 0.5 * (passive + passive.adjoint().eval());
  DensityMatrix passive_state(std::move(passive));

  const double extracted =
      real_trace_product(hamiltonian.mat(), rho.mat()) -
      real_trace_product(hamiltonian.mat(), passive_state.mat());
  return PassiveTransform{std::move(unitary), extracted,
                          std::move(passive_state)};
}

FeedbackPolicy max_work_policy(const MeasurementRecord& record,
                               const HermitianOperator& hamiltonian) {
  std::vector<UnitaryMatrix> unitaries;
  unitaries.reserve(record.post_states.size());
  for (const auto& state : record.post_states) {
    if (state.has_value()) {
      unitaries.push_back(passive_transform(*state, hamiltonian).unitary);
    } else {
      unitaries.push_back(UnitaryMatrix::identity(hamiltonian.dim()));
    }
  }
  return FeedbackPolicy(std::move(unitaries));
}

std::optional<double> fine_grain_max_efficiency(const MeasurementSet& fine,
                                                const EngineSpec& spec) {
  if (!fine.is_fine_grain()) {
    throw std::invalid_argument(
        "fine_grain_max_efficiency: all projectors must be rank 1");
  }
  if (fine.dim() != spec.dim()) {
    throw std::invalid_argument("fine_grain_max_efficiency: dim mismatch");
  }
  const DensityMatrix rho = gibbs_product_state(spec);
  const HermitianOperator h_total = total_hamiltonian(spec);

  std::vector<double> q;
  q.reserve(fine.outcome_count());
  for (const HermitianOperator& proj : fine.projectors()) {
    q.push_back(std::max(real_trace_product(proj.mat(), rho.mat()), 0.0));
  }
  const double h = shannon_entropy(q);

  const double ground_energy = eig_hermitian(h_total).eigenvalues(0);
  const double intake =
      real_trace_product(h_total.mat(), rho.mat()) - ground_energy;
  if (intake <= 1e-14) {
    return std::nullopt;
  }
  return 1.0 -
         thermal_energy_uev(spec.memory_temperature_mk()) * h / intake;
}

UnitaryMatrix haar_random_unitary(int dim, SplitMix64& rng) {
  if (dim < 1) {
    throw std::invalid_argument("haar_random_unitary: dim must be >= 1");
  }
  Matrix ginibre(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ginibre(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the triangular factor's diagonal phases to be positive so the result
  // is Haar rather than biased by the QR phase convention.
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    const Complex phase = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

SearchResult search_max_landauer_efficiency(const MeasurementSet& m,
                                            const EngineSpec& spec, int trials,
                                            std::uint64_t seed) {
  if (trials < 0) {
    throw std::invalid_argument("search: trials must be >= 0");
  }
  const HermitianOperator h_total = total_hamiltonian(spec);
  const MeasurementRecord record = measure(gibbs_product_state(spec), m);

  FeedbackPolicy best = max_work_policy(record, h_total);
  CycleReport base = evaluate_cycle(spec, m, best);
  std::optional<double> best_eta = base.eta_landauer;
  double best_work = base.work_output_uev;

  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::for_stream(seed, static_cast<std::uint64_t>(t));
    std::vector<UnitaryMatrix> unitaries;
    unitaries.reserve(m.outcome_count());
    for (int a = 0; a < m.outcome_count(); ++a) {
      unitaries.push_back(haar_random_unitary(spec.dim(), rng));
    }
    FeedbackPolicy candidate(std::move(unitaries));
    const CycleReport report = evaluate_cycle(spec, m, candidate);
    if (report.eta_landauer &&
        (!best_eta || *report.eta_landauer > *best_eta)) {
      best = std::move(candidate);
      best_eta = report.eta_landauer;
      best_work = report.work_output_uev;
    }
  }
  return SearchResult{std::move(best), best_eta, best_work, trials, seed};
}

}  // namespace qhe
