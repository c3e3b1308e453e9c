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

#ifndef QHE_SCENARIOS_HPP
#define QHE_SCENARIOS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "engine.hpp"

namespace qhe {

/// Two resonant qubits, each with its own bath, plus the memory bath.
/// Energies follow hbar*omega = h*f with f in GHz.
struct TwoQubitParams {
  double f1_ghz = 5.0;
  double f2_ghz = 5.0;
  double t1_mk = 150.0;
  double t2_mk = 150.0;
  double t0_mk = 80.0;
};

/// The five packaged two-qubit measurement schemes. Matrices are written in
/// the computational basis {|00>, |01>, |10>, |11>}, which coincides with
/// the energy eigenbasis.
enum class Scenario {
  kEnergyFine,    // four rank-1 energy projectors
  kEnergyCoarse,  // excitation number: ranks (1, 2, 1)
  kBellFine,      // four rank-1 Bell projectors
  kBellCoarse,    // ranks (1, 1, 2) in the Bell basis
  kExtraCoarse,   // like/unlike qubit states: ranks (2, 2)
};

inline constexpr std::array<Scenario, 5> kAllScenarios = {
    Scenario::kEnergyFine, Scenario::kEnergyCoarse, Scenario::kBellFine,
    Scenario::kBellCoarse, Scenario::kExtraCoarse};

/// Stable public identifiers: "e-fine", "e-coarse", "bell-fine",
/// "bell-coarse", "extra-coarse".
std::string_view scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(std::string_view name);

/// Engine with H_i = (h f_i / 2) diag(-1, +1), ground state |0> at -h f_i/2.
EngineSpec two_qubit_spec(const TwoQubitParams& params);

MeasurementSet scenario_projectors(Scenario s);

/// The scenario's published feedback unitaries. Two coarse outcomes pick a
/// permutation branch from the relative weight of |01> and |10> in the
/// measurement record; ties take the |10>-heavy branch.
FeedbackPolicy scenario_policy(Scenario s, const MeasurementRecord& record);

/// Thermal outcome probabilities of the energy-basis measurement, in the
/// order (q00, q01, q10, q11).
std::array<double, 4> energy_basis_probabilities(const TwoQubitParams& params);

}  // namespace qhe

#endif  // QHE_SCENARIOS_HPP
