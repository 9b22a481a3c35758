// Copyright 2026 The qcool Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcool {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst observed deviation or failure description
};

/// Runs the library-wide invariant suite: numeric identities, probability
/// completeness, propagator/Hamiltonian consistency of every model family,
/// measure properties, parameter-count enumeration, and report round-trips.
/// Deterministic for a fixed seed.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 12345);

}  // namespace qcool
