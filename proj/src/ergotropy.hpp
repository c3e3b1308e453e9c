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

#ifndef QHE_ERGOTROPY_HPP
#define QHE_ERGOTROPY_HPP

#include <cstdint>
#include <optional>

#include "engine.hpp"
#include "rng.hpp"

namespace qhe {

/// Unitary that drains all extractable work from a state, together with the
/// resulting minimal-energy (passive) state and the extracted energy.
struct PassiveTransform {
  UnitaryMatrix unitary;
  double extracted_energy_uev;
  DensityMatrix passive_state;
};

/// Pairs the state's eigenvectors in descending-population order with the
/// Hamiltonian's eigenvectors in ascending-energy order. The passive energy
/// is invariant under degenerate ties; the unitary follows the deterministic
/// ordering of eig_hermitian.
PassiveTransform passive_transform(const DensityMatrix& rho,
                                   const HermitianOperator& hamiltonian);

/// Work-maximizing feedback: the passive transform of every present post
/// state; absent outcomes get the identity.
FeedbackPolicy max_work_policy(const MeasurementRecord& record,
                               const HermitianOperator& hamiltonian);

/// For a rank-1 projector family the maximal Landauer efficiency in closed
/// form: 1 - k_B T0 h[{q_k}] / (tr(H rho) - e_1). Rejects coarse sets;
/// nullopt when the intake tr(H rho) - e_1 is below 1e-14.
std::optional<double> fine_grain_max_efficiency(const MeasurementSet& fine,
                                                const EngineSpec& spec);

/// Haar-distributed random unitary: QR of a complex Ginibre matrix with the
/// triangular factor's diagonal phases fixed positive. Deterministic for a
/// given generator state.
UnitaryMatrix haar_random_unitary(int dim, SplitMix64& rng);

struct SearchResult {
  FeedbackPolicy best_policy;
  std::optional<double> best_eta_landauer;
  double best_work_output_uev;
  int trials;
  std::uint64_t seed;
};

/// Randomized search over feedback policies: the work-maximizing policy is
/// always a candidate, plus `trials` policies of independent Haar unitaries
/// drawn from per-trial sub-streams of the seed. Returns the candidate with
/// the best Landauer efficiency.
SearchResult search_max_landauer_efficiency(const MeasurementSet& m,
                                            const EngineSpec& spec, int trials,
                                            std::uint64_t seed);

}  // namespace qhe

#endif  // QHE_ERGOTROPY_HPP
