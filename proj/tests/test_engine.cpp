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

#include <algorithm>
#include <cmath>
#include <vector>

#include "engine.hpp"
#include "ergotropy.hpp"
#include "rng.hpp"

using namespace qhe;

namespace {

Partition qubit_partition(double f_ghz, double t_mk) {
  Matrix h(2, 2);
  const double half = 0.5 * kPlanckUevPerGhz * f_ghz;
  h << -half, 0, 0, half;
  return Partition(HermitianOperator(std::move(h)), t_mk);
}

EngineSpec two_qubits(double f_ghz, double t1_mk, double t2_mk, double t0_mk) {
  std::vector<Partition> parts{qubit_partition(f_ghz, t1_mk),
                               qubit_partition(f_ghz, t2_mk)};
  return EngineSpec(std::move(parts), t0_mk);
}

MeasurementSet basis_measurement(int dim) {
  std::vector<HermitianOperator> projectors;
  for (int k = 0; k < dim; ++k) {
    Matrix p = Matrix::Zero(dim, dim);
    p(k, k) = 1.0;
    projectors.emplace_back(std::move(p));
  }
  return MeasurementSet(std::move(projectors));
}

DensityMatrix basis_state(int dim, int k) {
  Matrix m = Matrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix random_density(int dim, SplitMix64& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

HermitianOperator random_hermitian(int dim, double scale, SplitMix64& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = scale * Complex(rng.next_gaussian(), rng.next_gaussian());
    }
  }
  return HermitianOperator(0.5 * (g + g.adjoint().eval()));
}

constexpr double kHbarOmega5Ghz = kPlanckUevPerGhz * 5.0;  // 20.67833848 ueV

}  // namespace

TEST_CASE("total hamiltonian of two equal qubits") {
  const EngineSpec spec = two_qubits(5.0, 150.0, 150.0, 80.0);
  const HermitianOperator h = total_hamiltonian(spec);
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << -kHbarOmega5Ghz, 0.0, 0.0, kHbarOmega5Ghz;
  CHECK(max_abs(h.mat() - expected) <= 1e-12);
}

TEST_CASE("total hamiltonian of a single partition is the local one") {
  SplitMix64 rng(3);
  const HermitianOperator local = random_hermitian(3, 5.0, rng);
  EngineSpec spec({Partition(local, 120.0)}, 80.0);
  CHECK(max_abs(total_hamiltonian(spec).mat() - local.mat()) == 0.0);
}

TEST_CASE("three-qubit spectrum enumerates all signed half-sums") {
  const double f[3] = {5.0, 3.0, 1.5};
  std::vector<Partition> parts;
  for (double fi : f) {
    parts.push_back(qubit_partition(fi, 100.0));
  }
  const EngineSpec spec(std::move(parts), 80.0);
  const Spectrum s = eig_hermitian(total_hamiltonian(spec));

  std::vector<double> expected;
  for (int mask = 0; mask < 8; ++mask) {
    double e = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double half = 0.5 * kPlanckUevPerGhz * f[i];
      e += (mask >> (2 - i)) & 1 ? half : -half;
    }
    expected.push_back(e);
  }
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < 8; ++k) {
    CHECK(s.eigenvalues(k) == doctest::Approx(expected[k]).epsilon(1e-12));
  }
}

TEST_CASE("partition and spec validation") {
  CHECK_THROWS_AS(qubit_partition(5.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(qubit_partition(5.0, -10.0), std::invalid_argument);
  CHECK_THROWS_AS((EngineSpec({qubit_partition(5.0, 100.0)}, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS((EngineSpec({}, 80.0)), std::invalid_argument);
}

TEST_CASE("gibbs state at very high temperature is maximally mixed") {
  SplitMix64 rng(11);
  std::vector<Partition> parts{
      Partition(random_hermitian(2, 10.0, rng), 1e12),
      Partition(random_hermitian(3, 10.0, rng), 1e12)};
  const EngineSpec spec(std::move(parts), 80.0);
  const DensityMatrix rho = gibbs_product_state(spec);
  CHECK(max_abs(rho.mat() - Matrix::Identity(6, 6) / 6.0) <= 1e-9);
}

TEST_CASE("single-qubit gibbs ground population at beta*gap = 1") {
  // Gap equal to k_B T: ground population 1/(1 + e^-1).
  const double gap = thermal_energy_uev(100.0);
  Matrix h(2, 2);
  h << -gap / 2.0, 0, 0, gap / 2.0;
  EngineSpec spec({Partition(HermitianOperator(std::move(h)), 100.0)}, 80.0);
  const DensityMatrix rho = gibbs_product_state(spec);
  CHECK(rho.mat()(0, 0).real() ==
        doctest::Approx(1.0 / (1.0 + std::exp(-1.0))).epsilon(1e-12));
}

TEST_CASE("two-qubit gibbs populations are largest for the ground state") {
  const EngineSpec spec = two_qubits(5.0, 150.0, 150.0, 80.0);
  const DensityMatrix rho = gibbs_product_state(spec);
  const double q00 = rho.mat()(0, 0).real();
  for (int k = 1; k < 4; ++k) {
    CHECK(q00 > rho.mat()(k, k).real());
  }
  // Product of single-qubit ground weights, evaluated directly.
  const double x = kHbarOmega5Ghz / thermal_energy_uev(150.0);
  const double ground = 1.0 / (1.0 + std::exp(-x));
  CHECK(q00 == doctest::Approx(ground * ground).epsilon(1e-12));
}

TEST_CASE("trivial measurement with the identity projector") {
  SplitMix64 rng(21);
  const DensityMatrix rho = random_density(4, rng);
  std::vector<HermitianOperator> projectors;
  projectors.emplace_back(Matrix::Identity(4, 4));
  const MeasurementSet m(std::move(projectors));
  const MeasurementRecord record = measure(rho, m);
  REQUIRE(record.outcome_count() == 1);
  CHECK(record.probabilities[0] == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(record.post_states[0].has_value());
  CHECK(max_abs(record.post_states[0]->mat() - rho.mat()) <= 1e-12);
}

TEST_CASE("basis measurement of the maximally mixed two-qubit state") {
  const DensityMatrix rho(Matrix::Identity(4, 4) / 4.0);
  const MeasurementRecord record = measure(rho, basis_measurement(4));
  for (double q : record.probabilities) {
    CHECK(q == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("measure rejects mismatched dimensions") {
  SplitMix64 rng(22);
  const DensityMatrix rho = random_density(2, rng);
  CHECK_THROWS_AS(measure(rho, basis_measurement(4)), std::invalid_argument);
}

TEST_CASE("measurement set validation rejects non-projector families") {
  std::vector<HermitianOperator> not_idempotent;
  not_idempotent.emplace_back(0.5 * Matrix::Identity(2, 2));
  not_idempotent.emplace_back(0.5 * Matrix::Identity(2, 2));
  CHECK_THROWS_AS((MeasurementSet(std::move(not_idempotent))),
                  std::invalid_argument);

  std::vector<HermitianOperator> incomplete;
  Matrix p = Matrix::Zero(2, 2);
  p(0, 0) = 1.0;
  incomplete.emplace_back(std::move(p));
  CHECK_THROWS_AS((MeasurementSet(std::move(incomplete))),
                  std::invalid_argument);
}

TEST_CASE("identity feedback on a diagonal state reproduces the state") {
  const EngineSpec spec = two_qubits(5.0, 300.0, 150.0, 80.0);
  const DensityMatrix rho = gibbs_product_state(spec);
  const MeasurementRecord record = measure(rho, basis_measurement(4));
  std::vector<UnitaryMatrix> identity(4, UnitaryMatrix::identity(4));
  const DensityMatrix rho_prime =
      apply_feedback(record, FeedbackPolicy(std::move(identity)));
  CHECK(max_abs(rho_prime.mat() - rho.mat()) <= 1e-12);
}

TEST_CASE("outcome-independent feedback never lowers the entropy") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SplitMix64 rng = SplitMix64::for_stream(314, seed);
    const int dim = 2 + static_cast<int>(rng.next() % 5);
    const DensityMatrix rho = random_density(dim, rng);
    const UnitaryMatrix v = haar_random_unitary(dim, rng);
    // Random orthogonal decomposition of the space.
    std::vector<HermitianOperator> projectors;
    int col = 0;
    while (col < dim) {
      const int g = 1 + static_cast<int>(rng.next() % (dim - col));
      const Matrix block = v.mat().middleCols(col, g);
      Matrix p = block * block.adjoint();
      projectors.emplace_back(0.5 * (p + p.adjoint().eval()));
      col += g;
    }
    const MeasurementSet m(std::move(projectors));
    const MeasurementRecord record = measure(rho, m);

    const UnitaryMatrix u = haar_random_unitary(dim, rng);
    std::vector<UnitaryMatrix> same(m.outcome_count(), u);
    const DensityMatrix rho_prime =
        apply_feedback(record, FeedbackPolicy(std::move(same)));
    CHECK(von_neumann_entropy(rho_prime) >= von_neumann_entropy(rho) - 1e-9);
  }
}

TEST_CASE("apply_feedback rejects a policy of the wrong length") {
  SplitMix64 rng(5);
  const DensityMatrix rho = random_density(4, rng);
  const MeasurementRecord record = measure(rho, basis_measurement(4));
  std::vector<UnitaryMatrix> too_short(2, UnitaryMatrix::identity(4));
  CHECK_THROWS_AS(
      apply_feedback(record, FeedbackPolicy(std::move(too_short))),
      std::invalid_argument);
}

TEST_CASE("energy changes vanish for an unchanged state") {
  const EngineSpec spec = two_qubits(5.0, 150.0, 150.0, 80.0);
  const DensityMatrix rho = gibbs_product_state(spec);
  for (double delta : energy_changes(spec, rho, rho)) {
    CHECK(delta == 0.0);
  }
}

TEST_CASE("energy changes for relaxing the first qubit") {
  const EngineSpec spec = two_qubits(5.0, 150.0, 150.0, 80.0);
  const DensityMatrix before = basis_state(4, 2);  // |10>
  const DensityMatrix after = basis_state(4, 0);   // |00>
  const std::vector<double> delta = energy_changes(spec, before, after);
  CHECK(delta[0] == doctest::Approx(-kHbarOmega5Ghz).epsilon(1e-12));
  CHECK(std::abs(delta[1]) <= 1e-12);
}

TEST_CASE("heats flip the sign of energy changes") {
  CHECK(heats({0.0, 0.0}) == std::vector<double>{0.0, 0.0});
  CHECK(heats({-3.0, 1.0}) == std::vector<double>{3.0, -1.0});
}

TEST_CASE("shannon entropy examples") {
  CHECK(shannon_entropy({1.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(shannon_entropy({0.5, 0.25, 0.25}) ==
        doctest::Approx(1.039720770839918).epsilon(1e-12));
  CHECK_THROWS_AS(shannon_entropy({0.5, 0.25}), std::invalid_argument);
  CHECK_THROWS_AS(shannon_entropy({1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("von Neumann entropy examples") {
  CHECK(von_neumann_entropy(basis_state(4, 1)) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(DensityMatrix(Matrix::Identity(5, 5) / 5.0)) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-12));
  Matrix m = Matrix::Zero(2, 2);
  m.diagonal() << 0.7, 0.3;
  CHECK(von_neumann_entropy(DensityMatrix(std::move(m))) ==
        doctest::Approx(0.6108643020548935).epsilon(1e-12));
}

TEST_CASE("landauer heat examples") {
  CHECK(landauer_heat(0.0, 80.0) == 0.0);
  const double ln2 = std::log(2.0);
  CHECK(landauer_heat(ln2, 80.0) ==
        doctest::Approx(-thermal_energy_uev(80.0) * ln2).epsilon(1e-15));
  CHECK(landauer_heat(ln2, 80.0) == doctest::Approx(-4.778464).epsilon(1e-6));
  CHECK(landauer_heat(2.0 * ln2, 80.0) ==
        doctest::Approx(2.0 * landauer_heat(ln2, 80.0)).epsilon(1e-15));
}

TEST_CASE("heat intake is the positive-part sum") {
  CHECK(heat_intake({-1.0, -2.0}) == 0.0);
  CHECK(heat_intake({3.0, -1.0}) == 3.0);
  CHECK(heat_intake({2.0, 5.0}) == 7.0);
}

TEST_CASE("landauer efficiency examples") {
  CHECK(landauer_efficiency({4.0, 2.0}, 0.0, 80.0) == doctest::Approx(1.0));
  const double expected =
      1.0 - thermal_energy_uev(80.0) * std::log(4.0) / 20.0;
  CHECK(landauer_efficiency({10.0, 10.0}, std::log(4.0), 80.0).value() ==
        doctest::Approx(expected).epsilon(1e-15));
  CHECK(landauer_efficiency({10.0, 10.0}, std::log(4.0), 80.0).value() ==
        doctest::Approx(0.5221537).epsilon(1e-6));
  CHECK(!landauer_efficiency({0.0, 0.0}, 0.5, 80.0).has_value());
  CHECK(!landauer_efficiency({-3.0, 1e-15}, 0.5, 80.0).has_value());
}

TEST_CASE("carnot efficiency definition") {
  CHECK(carnot_efficiency({1.0, -1.0, -1.0}, {200.0, 150.0, 80.0}).value() ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK(!carnot_efficiency({1.0, 2.0, 0.5}, {200.0, 150.0, 80.0}).has_value());
  // Zero-heat baths belong to neither set.
  CHECK(carnot_efficiency({1.0, 0.0, -1.0}, {200.0, 10.0, 80.0}).value() ==
        doctest::Approx(1.0 - 80.0 / 200.0).epsilon(1e-12));
}

TEST_CASE("identity feedback cycle only pays the memory cost") {
  const EngineSpec spec = two_qubits(5.0, 300.0, 150.0, 80.0);
  std::vector<UnitaryMatrix> identity(4, UnitaryMatrix::identity(4));
  const CycleReport report = evaluate_cycle(
      spec, basis_measurement(4), FeedbackPolicy(std::move(identity)));
  for (double q : report.heat_uev) {
    CHECK(std::abs(q) <= 1e-12);
  }
  CHECK(report.work_output_uev ==
        doctest::Approx(report.landauer_heat_uev).epsilon(1e-12));
  CHECK(report.landauer_heat_uev < 0.0);
  CHECK(!report.is_engine);
  CHECK(!report.eta_landauer.has_value());
}

TEST_CASE("extended clausius and first law on random cycles") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng = SplitMix64::for_stream(2718, seed);
    std::vector<Partition> parts{
        Partition(random_hermitian(2, 10.0, rng),
                  20.0 + 400.0 * rng.next_double()),
        Partition(random_hermitian(3, 10.0, rng),
                  20.0 + 400.0 * rng.next_double())};
    const EngineSpec spec(std::move(parts), 20.0 + 400.0 * rng.next_double());
    const int dim = spec.dim();

    const UnitaryMatrix v = haar_random_unitary(dim, rng);
    std::vector<HermitianOperator> projectors;
    int col = 0;
    while (col < dim) {
      const int g = 1 + static_cast<int>(rng.next() % std::min(3, dim - col));
      const Matrix block = v.mat().middleCols(col, g);
      Matrix p = block * block.adjoint();
      projectors.emplace_back(0.5 * (p + p.adjoint().eval()));
      col += g;
    }
    const MeasurementSet m(std::move(projectors));
    std::vector<UnitaryMatrix> unitaries;
    for (int a = 0; a < m.outcome_count(); ++a) {
      unitaries.push_back(haar_random_unitary(dim, rng));
    }
    const CycleReport report =
        evaluate_cycle(spec, m, FeedbackPolicy(std::move(unitaries)));

    double clausius = inverse_thermal_energy(spec.memory_temperature_mk()) *
                      report.landauer_heat_uev;
    double q_total = report.landauer_heat_uev;
    for (int i = 0; i < spec.partition_count(); ++i) {
      clausius += spec.partitions()[i].beta() * report.heat_uev[i];
      q_total += report.heat_uev[i];
    }
    CHECK(clausius <= 1e-9);
    CHECK(std::abs(report.work_output_uev - q_total) <= 1e-9);
    CHECK(report.shannon_h_nats + report.von_neumann_change_nats >= -1e-9);
  }
}
