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

#ifndef QHE_VERIFY_HPP
#define QHE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qhe {

/// Randomized verification battery. Every trial draws a fresh engine
/// (partition Hamiltonians, bath temperatures), a Haar-random measurement
/// set of mixed ranks and a Haar-random feedback policy from the sub-stream
/// (seed, trial), then checks the thermodynamic identities and bounds the
/// model guarantees. Fully reproducible per seed.
struct VerifyConfig {
  std::uint64_t seed = 42;
  long long trials = 1000;
  /// Partition dimension signatures, e.g. {{2,2},{2,3},{2,2,2}}; trials
  /// cycle through them. Each dimension >= 2, product <= 16.
  std::vector<std::vector<int>> dims{{2, 2}, {2, 3}, {2, 2, 2}};
};

struct CheckCounter {
  std::string name;
  long long trials = 0;
  long long failures = 0;
};

struct VerifySummary {
  std::uint64_t seed = 0;
  long long requested_trials = 0;
  std::vector<std::vector<int>> dims;
  std::vector<CheckCounter> checks;

  long long total_failures() const;
  const CheckCounter& check(const std::string& name) const;
};

VerifySummary run_verify(const VerifyConfig& config);

/// Parses "2x2,2x3,2x2x2" into dimension signatures; validates the same
/// constraints as VerifyConfig.
std::vector<std::vector<int>> parse_dims(const std::string& text);

std::string format_dims(const std::vector<std::vector<int>>& dims);

/// Deterministic text rendering used by the command-line front end.
std::string format_summary(const VerifySummary& summary);

}  // namespace qhe

#endif  // QHE_VERIFY_HPP
