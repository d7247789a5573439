// Copyright 2026 The Authors.
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

// Importance values p_i = max_A f_i(A) / F(A), computed exactly, in closed
// form, or bounded from above. Sampling only needs p_hat_i >= p_i.

#ifndef SUBMOD_IMPORTANCE_HPP_
#define SUBMOD_IMPORTANCE_HPP_

#include <string>
#include <vector>

#include "submod/core_model.hpp"
#include "submod/families.hpp"
#include "submod/matroid.hpp"

namespace submod {

inline constexpr int kMaxExactImportanceSize = 20;

enum class ImportanceMode {
  kExact,
  kExactMatroid,
  kClosedCoverage,
  kClosedFacility,
  kUpperMonotone,
};

std::string ImportanceModeName(ImportanceMode mode);

struct ImportanceEstimates {
  std::vector<double> p_hat;
  ImportanceMode mode = ImportanceMode::kExact;
  double sum_p = 0.0;

  ImportanceEstimates() = default;
  ImportanceEstimates(std::vector<double> values, ImportanceMode m);
};

// Brute force over all nonempty A, n <= 20. Sets with F(A) = 0 contribute
// ratio 0. Subsets are visited in Gray-code order so each step toggles one
// element of a reused Subset.
ImportanceEstimates PiExact(const DecomposableFunction& f);

// Brute force over nonempty independent sets of `m`.
ImportanceEstimates PiExactMatroid(const DecomposableFunction& f,
                                   const Matroid& m,
                                   uint64_t budget = kDefaultEnumerationBudget);

// p_i = max over sets a containing i of 1/|S_a|. O(sum |S_a| + N).
ImportanceEstimates PiCoverage(const CoverageInstance& inst);

// p_i = max_j c(i,j) / F({j}) over columns with F({j}) > 0. O(N n).
ImportanceEstimates PiFacility(const FacilityLocationInstance& inst);

// p_hat_i = n * max_e f_i({e}) / F({e}); valid upper bound for monotone
// components (f_i(A) <= |A| f_i({e*}) and F(A) >= F({e*})).
ImportanceEstimates PiUpperMonotone(const DecomposableFunction& f);

// CLI-facing selector. kAuto picks closed forms when the family has one,
// else exact for n <= 20, else the monotone bound.
enum class PiRequest { kAuto, kExact, kExactMatroid, kClosed, kUpper };

PiRequest ParsePiRequest(const std::string& name);
std::string PiRequestName(PiRequest request);

// Throws kIncompatible for closed forms on other families, exact-matroid
// without a matroid, or the monotone bound on non-monotone components.
ImportanceEstimates EstimateImportance(const Instance& inst, PiRequest request,
                                       const Matroid* matroid = nullptr);

}  // namespace submod

#endif  // SUBMOD_IMPORTANCE_HPP_
