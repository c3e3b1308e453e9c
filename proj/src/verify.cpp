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

#include "verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ergotropy.hpp"

namespace qhe {

namespace {

constexpr double kTol = 1e-9;

enum CheckId : int {
  kFirstLawClosure = 0,
  kExtendedClausius,
  kInformationBound,
  kGibbsClausius,
  kUnitalEntropyIncrease,
  kLandauerVsCarnot,
  kMeasurementRecord,
  kBistochasticOverlaps,
  kErgotropyNonnegative,
  kPassiveMinimality,
  kMaxWorkDominance,
  kFineGrainClosedForm,
  kEnergyBasisOptimality,
  kCheckCount,
};

const char* kCheckNames[kCheckCount] = {
    "first-law-closure",      "extended-clausius",
    "information-bound",      "gibbs-clausius",
    "unital-entropy-increase", "landauer-vs-carnot",
    "measurement-record",     "bistochastic-overlaps",
    "ergotropy-nonnegative",  "passive-minimality",
    "max-work-dominance",     "fine-grain-closed-form",
    "energy-basis-optimality",
};

double log_uniform(SplitMix64& rng, double lo, double hi) {
  return std::exp(std::log(lo) +
                  rng.next_double() * (std::log(hi) - std::log(lo)));
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

EngineSpec random_spec(const std::vector<int>& dims, double t_lo_mk,
                       double t_hi_mk, double scale, SplitMix64& rng) {
  std::vector<Partition> partitions;
  partitions.reserve(dims.size());
  for (int d : dims) {
    partitions.emplace_back(random_hermitian(d, scale, rng),
                            log_uniform(rng, t_lo_mk, t_hi_mk));
  }
  return EngineSpec(std::move(partitions), log_uniform(rng, t_lo_mk, t_hi_mk));
}

// Projector family built from column groups of a Haar unitary. Fine-grain
// when requested, otherwise a random composition with parts of size 1..4.
MeasurementSet haar_measurement_set(int dim, bool fine_grain,
                                    SplitMix64& rng) {
  const UnitaryMatrix v = haar_random_unitary(dim, rng);
  std::vector<int> parts;
  if (fine_grain) {
    parts.assign(dim, 1);
  } else {
    int remaining = dim;
    while (remaining > 0) {
      const int cap = std::min(remaining, 4);
      const int g = 1 + static_cast<int>(rng.next() % cap);
      parts.push_back(g);
      remaining -= g;
    }
  }
  std::vector<HermitianOperator> projectors;
  projectors.reserve(parts.size());
  int col = 0;
  for (int g : parts) {
    const Matrix block = v.mat().middleCols(col, g);
    Matrix p = block * block.adjoint();
    p = 0.5 * (p + p.adjoint().eval());
    projectors.emplace_back(std::move(p));
    col += g;
  }
  return MeasurementSet(std::move(projectors));
}

FeedbackPolicy haar_policy(int dim, int outcomes, SplitMix64& rng) {
  std::vector<UnitaryMatrix> unitaries;
  unitaries.reserve(outcomes);
  for (int a = 0; a < outcomes; ++a) {
    unitaries.push_back(haar_random_unitary(dim, rng));
  }
  return FeedbackPolicy(std::move(unitaries));
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

struct Tally {
  VerifySummary* summary;
  void record(CheckId id, bool ok) {
    CheckCounter& c = summary->checks[id];
    ++c.trials;
    if (!ok) {
      ++c.failures;
    }
  }
};

}  // namespace

long long VerifySummary::total_failures() const {
  long long total = 0;
  for (const CheckCounter& c : checks) {
    total += c.failures;
  }
  return total;
}

const CheckCounter& VerifySummary::check(const std::string& name) const {
  for (const CheckCounter& c : checks) {
    if (c.name == name) {
      return c;
    }
  }
  throw std::out_of_range("VerifySummary: no check named " + name);
}

std::vector<std::vector<int>> parse_dims(const std::string& text) {
  std::vector<std::vector<int>> dims;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::vector<int> signature;
    std::istringstream parts(token);
    std::string part;
    while (std::getline(parts, part, 'x')) {
      std::size_t used = 0;
      int d = 0;
      try {
        d = std::stoi(part, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_dims: bad token '" + token + "'");
      }
      if (used != part.size()) {
        throw std::invalid_argument("parse_dims: bad token '" + token + "'");
      }
      signature.push_back(d);
    }
    if (signature.empty()) {
      throw std::invalid_argument("parse_dims: empty signature");
    }
    dims.push_back(std::move(signature));
  }
  if (dims.empty()) {
    throw std::invalid_argument("parse_dims: no signatures given");
  }
  for (const auto& signature : dims) {
    long long product = 1;
    for (int d : signature) {
      if (d < 2) {
        throw std::invalid_argument("parse_dims: dimensions must be >= 2");
      }
      product *= d;
    }
    if (product > 16) {
      throw std::invalid_argument("parse_dims: total dimension exceeds 16");
    }
  }
  return dims;
}

std::string format_dims(const std::vector<std::vector<int>>& dims) {
  std::ostringstream out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    for (std::size_t j = 0; j < dims[i].size(); ++j) {
      if (j > 0) {
        out << 'x';
      }
      out << dims[i][j];
    }
  }
  return out.str();
}

VerifySummary run_verify(const VerifyConfig& config) {
  if (config.trials < 1) {
    throw std::invalid_argument("run_verify: trials must be >= 1");
  }
  // Re-validate through the same gate as the textual form.
  parse_dims(format_dims(config.dims));

  VerifySummary summary;
  summary.seed = config.seed;
  summary.requested_trials = config.trials;
  summary.dims = config.dims;
  summary.checks.resize(kCheckCount);
  for (int i = 0; i < kCheckCount; ++i) {
    summary.checks[i].name = kCheckNames[i];
  }
  Tally tally{&summary};

  for (long long trial = 0; trial < config.trials; ++trial) {
    SplitMix64 rng =
        SplitMix64::for_stream(config.seed, static_cast<std::uint64_t>(trial));
    const std::vector<int>& dims = config.dims[trial % config.dims.size()];

    // Unconstrained instance: temperatures span [10, 1000] mK, level
    // spacings up to tens of ueV. Used for the global identities and
    // bounds, all of which compare absolute energies or entropies.
    const double scale = log_uniform(rng, 2.0, 30.0);
    const EngineSpec spec = random_spec(dims, 10.0, 1000.0, scale, rng);
    const MeasurementSet mset = haar_measurement_set(spec.dim(), false, rng);
    const FeedbackPolicy policy = haar_policy(spec.dim(), mset.outcome_count(), rng);

    const DensityMatrix rho = gibbs_product_state(spec);
    const MeasurementRecord record = measure(rho, mset);
    const DensityMatrix rho_prime = apply_feedback(record, policy);
    const HermitianOperator h_total = total_hamiltonian(spec);
    const CycleReport report = evaluate_cycle(spec, mset, policy);

    // First law: W_out equals the total heat ceded by all N+1 baths.
    double q_total = report.landauer_heat_uev;
    for (double q : report.heat_uev) {
      q_total += q;
    }
    tally.record(kFirstLawClosure,
                 std::abs(report.work_output_uev - q_total) <= kTol);

    // Clausius inequality for the extended machine, memory bath included.
    double clausius = inverse_thermal_energy(spec.memory_temperature_mk()) *
                      report.landauer_heat_uev;
    for (int i = 0; i < spec.partition_count(); ++i) {
      clausius +=
          spec.partitions()[i].beta() * report.heat_uev[i];
    }
    tally.record(kExtendedClausius, clausius <= kTol);

    // The outcome information bounds the entropy compression.
    tally.record(kInformationBound,
                 report.shannon_h_nats + report.von_neumann_change_nats >=
                     -kTol);

    // Entropy-weighted energy balance of the feedback stroke.
    double weighted = 0.0;
    for (int i = 0; i < spec.partition_count(); ++i) {
      weighted += spec.partitions()[i].beta() * report.delta_e_uev[i];
    }
    tally.record(kGibbsClausius,
                 weighted >= report.von_neumann_change_nats - kTol);

    // Outcome-independent feedback cannot compress entropy.
    {
      const UnitaryMatrix u = haar_random_unitary(spec.dim(), rng);
      std::vector<UnitaryMatrix> same(mset.outcome_count(), u);
      const DensityMatrix rho_unital =
          apply_feedback(record, FeedbackPolicy(std::move(same)));
      tally.record(kUnitalEntropyIncrease,
                   von_neumann_entropy(rho_unital) - von_neumann_entropy(rho) >=
                       -kTol);
    }

    // Checked on every cycle that lands in the engine regime; random
    // policies rarely do, the work-maximizing cycles below often do. The
    // regime must be resolved beyond the energy tolerance: a work output
    // inside [0, 1e-9] ueV is indistinguishable from a non-engine, and its
    // efficiency ratio carries no significant digits.
    const auto check_carnot = [&tally](const CycleReport& r) {
      if (r.eta_landauer && r.eta_carnot && r.work_output_uev > kTol) {
        tally.record(kLandauerVsCarnot,
                     *r.eta_landauer <= *r.eta_carnot + kTol);
      }
    };
    check_carnot(report);

    // Record sanity: normalized probabilities, unit-trace PSD states.
    {
      bool ok = true;
      double total = 0.0;
      for (double q : record.probabilities) {
        ok = ok && q >= 0.0;
        total += q;
      }
      ok = ok && std::abs(total - 1.0) <= kTol;
      for (const auto& state : record.post_states) {
        if (state.has_value()) {
          ok = ok && std::abs(state->mat().trace().real() - 1.0) <= kTol;
          ok = ok && min_eigenvalue(state->mat()) >= -kTol;
        }
      }
      ok = ok && std::abs(rho_prime.mat().trace().real() - 1.0) <= kTol;
      ok = ok && min_eigenvalue(rho_prime.mat()) >= -kTol;
      tally.record(kMeasurementRecord, ok);
    }

    // Squared overlaps of any orthonormal basis against the energy basis
    // form a bistochastic matrix.
    {
      const UnitaryMatrix f = haar_random_unitary(spec.dim(), rng);
      const Matrix overlaps =
          f.mat().adjoint() * eig_hermitian(h_total).eigenvectors;
      const Eigen::ArrayXXd p = overlaps.cwiseAbs2().array();
      bool ok = true;
      for (int k = 0; k < spec.dim(); ++k) {
        ok = ok && std::abs(p.row(k).sum() - 1.0) <= kTol;
        ok = ok && std::abs(p.col(k).sum() - 1.0) <= kTol;
      }
      tally.record(kBistochasticOverlaps, ok);
    }

    // Ergotropy machinery on the post-feedback state.
    {
      const PassiveTransform pt = passive_transform(rho_prime, h_total);
      tally.record(kErgotropyNonnegative,
                   pt.extracted_energy_uev >= -kTol &&
                       passive_transform(rho, h_total).extracted_energy_uev >=
                           -kTol);
      const double passive_energy =
          real_trace_product(h_total.mat(), pt.passive_state.mat());
      bool ok = true;
      for (int s = 0; s < 8; ++s) {
        const UnitaryMatrix v = haar_random_unitary(spec.dim(), rng);
        const Matrix rotated =
            v.mat() * rho_prime.mat() * v.mat().adjoint();
        ok = ok &&
             passive_energy <= real_trace_product(h_total.mat(), rotated) + kTol;
      }
      tally.record(kPassiveMinimality, ok);
    }

    // The per-outcome passive policy dominates the random policy in work.
    {
      const CycleReport best =
          evaluate_cycle(spec, mset, max_work_policy(record, h_total));
      tally.record(kMaxWorkDominance,
                   best.work_output_uev >= report.work_output_uev - kTol);
      check_carnot(best);
    }

    // Moderate instance for the closed-form equality and basis-optimality
    // checks: warm enough that the heat intake stays well clear of the
    // floating-point noise floor its denominator divides by.
    {
      const double scale_b = log_uniform(rng, 1.0, 8.0);
      const EngineSpec spec_b = random_spec(dims, 100.0, 1000.0, scale_b, rng);
      const HermitianOperator h_b = total_hamiltonian(spec_b);
      const DensityMatrix rho_b = gibbs_product_state(spec_b);
      const MeasurementSet fine = haar_measurement_set(spec_b.dim(), true, rng);
      const MeasurementRecord record_b = measure(rho_b, fine);
      const CycleReport best_b =
          evaluate_cycle(spec_b, fine, max_work_policy(record_b, h_b));
      check_carnot(best_b);
      const std::optional<double> closed =
          fine_grain_max_efficiency(fine, spec_b);
      if (best_b.eta_landauer && closed) {
        tally.record(kFineGrainClosedForm,
                     std::abs(*best_b.eta_landauer - *closed) <= kTol);
      }

      // Measuring in the energy eigenbasis gathers the least information.
      const Spectrum energy = eig_hermitian(h_b);
      std::vector<double> p_energy(spec_b.dim());
      for (int k = 0; k < spec_b.dim(); ++k) {
        const auto col = energy.eigenvectors.col(k);
        p_energy[k] =
            std::max((col.adjoint() * rho_b.mat() * col)(0, 0).real(), 0.0);
      }
      const double h_energy = shannon_entropy(p_energy);
      const double h_fine = best_b.shannon_h_nats;
      bool ok = h_fine >= h_energy - kTol;
      if (closed) {
        std::vector<HermitianOperator> eproj;
        for (int k = 0; k < spec_b.dim(); ++k) {
          const auto col = energy.eigenvectors.col(k);
          Matrix p = col * col.adjoint();
          eproj.emplace_back(0.5 * (p + p.adjoint().eval()));
        }
        const std::optional<double> eta_energy =
            fine_grain_max_efficiency(MeasurementSet(std::move(eproj)), spec_b);
        if (eta_energy) {
          ok = ok && *closed <= *eta_energy + kTol;
        }
      }
      tally.record(kEnergyBasisOptimality, ok);
    }
  }
  return summary;
}

std::string format_summary(const VerifySummary& summary) {
  std::ostringstream out;
  out << "verify seed=" << summary.seed
      << " trials=" << summary.requested_trials
      << " dims=" << format_dims(summary.dims) << '\n';
  for (const CheckCounter& c : summary.checks) {
    out << "  " << c.name;
    for (std::size_t pad = c.name.size(); pad < 26; ++pad) {
      out << ' ';
    }
    out << " trials=" << c.trials << " failures=" << c.failures << '\n';
  }
  out << "total failures: " << summary.total_failures() << '\n';
  return out.str();
}

}  // namespace qhe
