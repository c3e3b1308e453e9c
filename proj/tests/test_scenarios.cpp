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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ergotropy.hpp"
#include "scenarios.hpp"

using namespace qhe;

namespace {

constexpr double kHbarOmega5Ghz = kPlanckUevPerGhz * 5.0;

Eigen::Vector4cd bell_state(int which) {
  Eigen::Vector4cd v;
  switch (which) {
    case 0: v << 1, 0, 0, 1; break;   // Phi+
    case 1: v << 0, 1, 1, 0; break;   // Psi+
    case 2: v << 1, 0, 0, -1; break;  // Phi-
    default: v << 0, 1, -1, 0; break; // Psi-
  }
  return v / std::sqrt(2.0);
}

}  // namespace

TEST_CASE("scenario names round-trip") {
  for (Scenario s : kAllScenarios) {
    const auto parsed = scenario_from_name(scenario_name(s));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == s);
  }
  CHECK(!scenario_from_name("nonsense").has_value());
}

TEST_CASE("two-qubit spec pins the physical constants") {
  const TwoQubitParams params;
  const EngineSpec spec = two_qubit_spec(params);
  // h * 5 GHz = 20.678 ueV.
  CHECK(kHbarOmega5Ghz == doctest::Approx(20.67833848).epsilon(1e-9));
  CHECK(spec.partitions()[0].local_hamiltonian.mat()(1, 1).real() ==
        doctest::Approx(kHbarOmega5Ghz / 2.0).epsilon(1e-12));
  // k_B * 150 mK = 12.926 ueV.
  CHECK(thermal_energy_uev(150.0) ==
        doctest::Approx(12.925999893).epsilon(1e-9));
  const Spectrum s = eig_hermitian(total_hamiltonian(spec));
  CHECK(s.eigenvalues(0) == doctest::Approx(-kHbarOmega5Ghz).epsilon(1e-12));
  CHECK(std::abs(s.eigenvalues(1)) <= 1e-12);
  CHECK(std::abs(s.eigenvalues(2)) <= 1e-12);
  CHECK(s.eigenvalues(3) == doctest::Approx(kHbarOmega5Ghz).epsilon(1e-12));
}

TEST_CASE("two-qubit spec validates inputs") {
  TwoQubitParams params;
  params.f1_ghz = -1.0;
  CHECK_THROWS_AS(two_qubit_spec(params), std::invalid_argument);
  params.f1_ghz = 5.0;
  params.t2_mk = 0.0;
  CHECK_THROWS_AS(two_qubit_spec(params), std::invalid_argument);
}

TEST_CASE("projector ranks per scenario") {
  CHECK(scenario_projectors(Scenario::kEnergyFine).ranks() ==
        std::vector<int>{1, 1, 1, 1});
  CHECK(scenario_projectors(Scenario::kEnergyCoarse).ranks() ==
        std::vector<int>{1, 2, 1});
  CHECK(scenario_projectors(Scenario::kBellFine).ranks() ==
        std::vector<int>{1, 1, 1, 1});
  CHECK(scenario_projectors(Scenario::kBellCoarse).ranks() ==
        std::vector<int>{1, 1, 2});
  CHECK(scenario_projectors(Scenario::kExtraCoarse).ranks() ==
        std::vector<int>{2, 2});
}

TEST_CASE("coarse bell projector equals the like-states projector") {
  const MeasurementSet bell_coarse = scenario_projectors(Scenario::kBellCoarse);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(3, 3) = 1.0;
  CHECK(max_abs(bell_coarse.projectors()[2].mat() - expected) <= 1e-12);
}

TEST_CASE("extra-coarse projectors sum to the identity") {
  const MeasurementSet extra = scenario_projectors(Scenario::kExtraCoarse);
  const Matrix sum =
      extra.projectors()[0].mat() + extra.projectors()[1].mat();
  CHECK(max_abs(sum - Matrix::Identity(4, 4)) <= 1e-12);
}

TEST_CASE("energy-fine policy for the doubly excited outcome") {
  const TwoQubitParams params;
  const EngineSpec spec = two_qubit_spec(params);
  const MeasurementSet mset = scenario_projectors(Scenario::kEnergyFine);
  const MeasurementRecord record = measure(gibbs_product_state(spec), mset);
  const FeedbackPolicy policy = scenario_policy(Scenario::kEnergyFine, record);
  const Matrix& u11 = policy.unitaries()[3].mat();
  Matrix expected(4, 4);
  expected << 0, 0, 0, 1,  //
      0, 1, 0, 0,          //
      0, 0, 1, 0,          //
      1, 0, 0, 0;
  CHECK(max_abs(u11 - expected) == 0.0);
}

TEST_CASE("bell-fine unitaries send each bell state to the ground state") {
  const TwoQubitParams params;
  const EngineSpec spec = two_qubit_spec(params);
  const MeasurementSet mset = scenario_projectors(Scenario::kBellFine);
  const MeasurementRecord record = measure(gibbs_product_state(spec), mset);
  const FeedbackPolicy policy = scenario_policy(Scenario::kBellFine, record);
  for (int a = 0; a < 4; ++a) {
    const Eigen::Vector4cd mapped =
        policy.unitaries()[a].mat() * bell_state(a);
    CHECK(std::abs(mapped(0)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("single-excitation branch follows the heavier population") {
  const MeasurementSet mset = scenario_projectors(Scenario::kEnergyCoarse);

  SUBCASE("hot first qubit: |10> is heavier") {
    const TwoQubitParams params{5.0, 5.0, 400.0, 150.0, 80.0};
    const EngineSpec spec = two_qubit_spec(params);
    const MeasurementRecord record = measure(gibbs_product_state(spec), mset);
    REQUIRE(record.post_states[1].has_value());
    CHECK(record.post_states[1]->mat()(2, 2).real() >
          record.post_states[1]->mat()(1, 1).real());
    const FeedbackPolicy policy =
        scenario_policy(Scenario::kEnergyCoarse, record);
    Matrix swap_00_10(4, 4);
    swap_00_10 << 0, 0, 1, 0,  //
        0, 1, 0, 0,            //
        1, 0, 0, 0,            //
        0, 0, 0, 1;
    CHECK(max_abs(policy.unitaries()[1].mat() - swap_00_10) == 0.0);
  }

  SUBCASE("cold first qubit: |01> is heavier") {
    const TwoQubitParams params{5.0, 5.0, 50.0, 150.0, 80.0};
    const EngineSpec spec = two_qubit_spec(params);
    const MeasurementRecord record = measure(gibbs_product_state(spec), mset);
    const FeedbackPolicy policy =
        scenario_policy(Scenario::kEnergyCoarse, record);
    Matrix cycle(4, 4);
    cycle << 0, 1, 0, 0,  //
        0, 0, 1, 0,       //
        1, 0, 0, 0,       //
        0, 0, 0, 1;
    CHECK(max_abs(policy.unitaries()[1].mat() - cycle) == 0.0);
  }

  SUBCASE("tie falls to the |10>-heavy branch") {
    const TwoQubitParams params;  // T1 = T2, f1 = f2
    const EngineSpec spec = two_qubit_spec(params);
    const MeasurementRecord record = measure(gibbs_product_state(spec), mset);
    REQUIRE(record.post_states[1].has_value());
    CHECK(record.post_states[1]->mat()(1, 1).real() ==
          record.post_states[1]->mat()(2, 2).real());
    const FeedbackPolicy policy =
        scenario_policy(Scenario::kEnergyCoarse, record);
    Matrix swap_00_10(4, 4);
    swap_00_10 << 0, 0, 1, 0,  //
        0, 1, 0, 0,            //
        1, 0, 0, 0,            //
        0, 0, 0, 1;
    CHECK(max_abs(policy.unitaries()[1].mat() - swap_00_10) == 0.0);
  }
}

TEST_CASE("scenario policy rejects mismatched records") {
  const TwoQubitParams params;
  const EngineSpec spec = two_qubit_spec(params);
  const MeasurementRecord record = measure(
      gibbs_product_state(spec), scenario_projectors(Scenario::kEnergyFine));
  CHECK_THROWS_AS(scenario_policy(Scenario::kEnergyCoarse, record),
                  std::invalid_argument);
}

TEST_CASE("closed-form probabilities") {
  SUBCASE("symmetry at equal parameters") {
    const TwoQubitParams params;
    const auto q = energy_basis_probabilities(params);
    CHECK(q[1] == q[2]);
    CHECK(q[0] + q[1] + q[2] + q[3] == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("infinite-temperature limit is uniform") {
    TwoQubitParams params;
    params.t1_mk = 1e12;
    params.t2_mk = 1e12;
    const auto q = energy_basis_probabilities(params);
    for (double v : q) {
      CHECK(v == doctest::Approx(0.25).epsilon(1e-9));
    }
  }

  SUBCASE("ground probability at stock parameters") {
    const TwoQubitParams params;
    const auto q = energy_basis_probabilities(params);
    const double x = kHbarOmega5Ghz / thermal_energy_uev(150.0);
    const double a = 1.0 / (1.0 + std::exp(-x));
    CHECK(q[0] == doctest::Approx(a * a).epsilon(1e-15));
    CHECK(q[0] == doctest::Approx(0.6922).epsilon(1e-4));
  }

  SUBCASE("matches the measured energy-basis record to 1e-12") {
    for (double t1 : {10.0, 77.0, 150.0, 320.0, 500.0}) {
      TwoQubitParams params;
      params.t1_mk = t1;
      params.f2_ghz = 4.0;
      const EngineSpec spec = two_qubit_spec(params);
      const MeasurementRecord record =
          measure(gibbs_product_state(spec),
                  scenario_projectors(Scenario::kEnergyFine));
      const auto q = energy_basis_probabilities(params);
      for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(record.probabilities[k] - q[k]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("bell-fine outcome probabilities come in equal pairs") {
  for (double t1 : {25.0, 150.0, 420.0}) {
    TwoQubitParams params;
    params.t1_mk = t1;
    const EngineSpec spec = two_qubit_spec(params);
    const MeasurementRecord record = measure(
        gibbs_product_state(spec), scenario_projectors(Scenario::kBellFine));
    CHECK(std::abs(record.probabilities[0] - record.probabilities[2]) <=
          1e-12);
    CHECK(std::abs(record.probabilities[1] - record.probabilities[3]) <=
          1e-12);
    const auto q = energy_basis_probabilities(params);
    CHECK(record.probabilities[0] ==
          doctest::Approx(0.5 * (q[0] + q[3])).epsilon(1e-12));
    CHECK(record.probabilities[1] ==
          doctest::Approx(0.5 * (q[1] + q[2])).epsilon(1e-12));
  }
}

TEST_CASE("energy-fine feedback leaves the pure ground state exactly") {
  const TwoQubitParams params{5.0, 5.0, 300.0, 150.0, 80.0};
  const EngineSpec spec = two_qubit_spec(params);
  const MeasurementSet mset = scenario_projectors(Scenario::kEnergyFine);
  const MeasurementRecord record = measure(gibbs_product_state(spec), mset);
  const DensityMatrix rho_prime =
      apply_feedback(record, scenario_policy(Scenario::kEnergyFine, record));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == 0 && j == 0) {
        CHECK(rho_prime.mat()(0, 0).real() ==
              doctest::Approx(1.0).epsilon(1e-12));
      } else {
        CHECK(std::abs(rho_prime.mat()(i, j)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("published unitaries achieve the max-work post energy") {
  for (Scenario s : kAllScenarios) {
    for (double t1 : {10.0, 90.0, 150.0, 260.0, 500.0}) {
      CAPTURE(scenario_name(s));
      CAPTURE(t1);
      TwoQubitParams params;
      params.t1_mk = t1;
      const EngineSpec spec = two_qubit_spec(params);
      const HermitianOperator h = total_hamiltonian(spec);
      const MeasurementSet mset = scenario_projectors(s);
      const MeasurementRecord record =
          measure(gibbs_product_state(spec), mset);
      const DensityMatrix via_published =
          apply_feedback(record, scenario_policy(s, record));
      const DensityMatrix via_max_work =
          apply_feedback(record, max_work_policy(record, h));
      CHECK(std::abs(real_trace_product(h.mat(), via_published.mat()) -
                     real_trace_product(h.mat(), via_max_work.mat())) <=
            1e-9);
    }
  }
}
