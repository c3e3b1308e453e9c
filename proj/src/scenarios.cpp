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

#include "scenarios.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qhe {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Matrix matrix4(std::initializer_list<double> rows) {
  Matrix m(4, 4);
  int k = 0;
  for (double v : rows) {
    m(k / 4, k % 4) = v;
    ++k;
  }
  return m;
}

// Permutations exchanging one energy eigenstate with the ground state.
Matrix u_00() { return Matrix::Identity(4, 4); }

Matrix u_01() {
  return matrix4({0, 1, 0, 0,  //
                  1, 0, 0, 0,  //
                  0, 0, 1, 0,  //
                  0, 0, 0, 1});
}

Matrix u_10() {
  return matrix4({0, 0, 1, 0,  //
                  0, 1, 0, 0,  //
                  1, 0, 0, 0,  //
                  0, 0, 0, 1});
}

Matrix u_11() {
  return matrix4({0, 0, 0, 1,  //
                  0, 1, 0, 0,  //
                  0, 0, 1, 0,  //
                  1, 0, 0, 0});
}

// Rotates each Bell state onto a distinct energy eigenstate:
// Phi+ -> |00>, Psi+ -> |01>, Phi- -> |10>, Psi- -> |11>.
Matrix u_t() {
  return kInvSqrt2 * matrix4({1, 0, 0, 1,   //
                              0, 1, 1, 0,   //
                              1, 0, 0, -1,  //
                              0, 1, -1, 0});
}

// Exchanges |01> and |11>, fixing the rest.
Matrix u_swap_01_11() {
  return matrix4({1, 0, 0, 0,  //
                  0, 0, 0, 1,  //
                  0, 0, 1, 0,  //
                  0, 1, 0, 0});
}

Matrix basis_projector(int k) {
  Matrix p = Matrix::Zero(4, 4);
  p(k, k) = 1.0;
  return p;
}

Matrix bell_projector(int which) {
  Eigen::Vector4cd v;
  switch (which) {
    case 0: v << 1, 0, 0, 1; break;   // Phi+
    case 1: v << 0, 1, 1, 0; break;   // Psi+
    case 2: v << 1, 0, 0, -1; break;  // Phi-
    default: v << 0, 1, -1, 0; break; // Psi-
  }
  v *= kInvSqrt2;
  return v * v.adjoint();
}

// The single-excitation outcome admits two work-maximizing permutations;
// the branch sends the heavier of |01>, |10> to the ground state. On a tie
// the |10>-heavy branch is used.
Matrix one_excitation_unitary(const MeasurementRecord& record, int outcome) {
  double w01 = 0.0;
  double w10 = 0.0;
  if (record.post_states[outcome].has_value()) {
    const Matrix& rho = record.post_states[outcome]->mat();
    w01 = rho(1, 1).real();
    w10 = rho(2, 2).real();
  }
  if (w10 >= w01) {
    return u_10();
  }
  return matrix4({0, 1, 0, 0,  //
                  0, 0, 1, 0,  //
                  1, 0, 0, 0,  //
                  0, 0, 0, 1});
}

FeedbackPolicy make_policy(std::vector<Matrix> mats) {
  std::vector<UnitaryMatrix> out;
  out.reserve(mats.size());
  for (Matrix& m : mats) {
    out.emplace_back(std::move(m));
  }
  return FeedbackPolicy(std::move(out));
}

}  // namespace

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kEnergyFine: return "e-fine";
    case Scenario::kEnergyCoarse: return "e-coarse";
    case Scenario::kBellFine: return "bell-fine";
    case Scenario::kBellCoarse: return "bell-coarse";
    case Scenario::kExtraCoarse: return "extra-coarse";
  }
  return "unknown";
}

std::optional<Scenario> scenario_from_name(std::string_view name) {
  for (Scenario s : kAllScenarios) {
    if (scenario_name(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

EngineSpec two_qubit_spec(const TwoQubitParams& params) {
  if (!(params.f1_ghz > 0.0) || !(params.f2_ghz > 0.0)) {
    throw std::invalid_argument("two_qubit_spec: frequencies must be positive");
  }
  const auto qubit = [](double f_ghz, double t_mk) {
    Matrix h(2, 2);
    const double half = 0.5 * kPlanckUevPerGhz * f_ghz;
    h << -half, 0.0, 0.0, half;
    return Partition(HermitianOperator(std::move(h)), t_mk);
  };
  std::vector<Partition> partitions;
  partitions.push_back(qubit(params.f1_ghz, params.t1_mk));
  partitions.push_back(qubit(params.f2_ghz, params.t2_mk));
  return EngineSpec(std::move(partitions), params.t0_mk);
}

MeasurementSet scenario_projectors(Scenario s) {
  std::vector<Matrix> mats;
  switch (s) {
    case Scenario::kEnergyFine:
      mats = {basis_projector(0), basis_projector(1), basis_projector(2),
              basis_projector(3)};
      break;
    case Scenario::kEnergyCoarse:
      mats = {basis_projector(0), basis_projector(1) + basis_projector(2),
              basis_projector(3)};
      break;
    case Scenario::kBellFine:
      mats = {bell_projector(0), bell_projector(1), bell_projector(2),
              bell_projector(3)};
      break;
    case Scenario::kBellCoarse:
      mats = {bell_projector(1), bell_projector(3),
              bell_projector(0) + bell_projector(2)};
      break;
    case Scenario::kExtraCoarse:
      mats = {basis_projector(0) + basis_projector(3),
              basis_projector(1) + basis_projector(2)};
      break;
  }
  std::vector<HermitianOperator> projectors;
  projectors.reserve(mats.size());
  for (Matrix& m : mats) {
    projectors.emplace_back(std::move(m));
  }
  return MeasurementSet(std::move(projectors));
}

FeedbackPolicy scenario_policy(Scenario s, const MeasurementRecord& record) {
  const int expected = scenario_projectors(s).outcome_count();
  if (record.outcome_count() != expected) {
    throw std::invalid_argument(
        "scenario_policy: record does not match the scenario's outcomes");
  }
  for (const auto& state : record.post_states) {
    if (state.has_value() && state->dim() != 4) {
      throw std::invalid_argument("scenario_policy: record dimension != 4");
    }
  }
  switch (s) {
    case Scenario::kEnergyFine:
      return make_policy({u_00(), u_01(), u_10(), u_11()});
    case Scenario::kEnergyCoarse:
      return make_policy({u_00(), one_excitation_unitary(record, 1), u_11()});
    case Scenario::kBellFine:
      // Rotate the Bell outcome onto its energy eigenstate, then permute
      // that eigenstate to the ground state.
      return make_policy({u_00() * u_t(), u_01() * u_t(), u_10() * u_t(),
                          u_11() * u_t()});
    case Scenario::kBellCoarse:
      return make_policy(
          {u_01() * u_t(), u_11() * u_t(), u_swap_01_11()});
    case Scenario::kExtraCoarse:
      return make_policy(
          {u_swap_01_11(), one_excitation_unitary(record, 1)});
  }
  throw std::logic_error("scenario_policy: unreachable");
}

std::array<double, 4> energy_basis_probabilities(const TwoQubitParams& params) {
  // Ground-state weight of one qubit: e^{x}/(2 cosh x) with x = h f/(2 kT),
  // evaluated as 1/(1 + e^{-2x}) so large x cannot overflow.
  const auto ground = [](double f_ghz, double t_mk) {
    const double x = 0.5 * kPlanckUevPerGhz * f_ghz / thermal_energy_uev(t_mk);
    return 1.0 / (1.0 + std::exp(-2.0 * x));
  };
  const double a = ground(params.f1_ghz, params.t1_mk);
  const double b = ground(params.f2_ghz, params.t2_mk);
  return {a * b, a * (1.0 - b), (1.0 - a) * b, (1.0 - a) * (1.0 - b)};
}

}  // namespace qhe
