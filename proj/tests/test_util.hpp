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

// Shared fixtures and brute-force oracles for the unit tests. The oracles
// deliberately avoid the library's estimators so they can check them.

#ifndef SUBMOD_TESTS_TEST_UTIL_HPP_
#define SUBMOD_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "submod/core_model.hpp"
#include "submod/families.hpp"

namespace submod::testing {

// Sets {0,1}, {1,2}, {2} over universe {0,1,2}.
inline std::shared_ptr<const CoverageInstance> ThreeSetCoverage() {
  return std::make_shared<const CoverageInstance>(
      CoverageInstance::FromSets(3, {{0, 1}, {1, 2}, {2}}));
}

// Facility rows (3,1) and (0,2).
inline std::shared_ptr<const FacilityLocationInstance> TwoClientFacility() {
  return std::make_shared<const FacilityLocationInstance>(
      FacilityLocationInstance::FromRows({{3, 1}, {0, 2}}));
}

// max over nonempty A of f_i(A) / F(A), with 0/0 skipped.
inline std::vector<double> BruteImportance(const DecomposableFunction& f) {
  const int n = f.n();
  std::vector<double> p(static_cast<size_t>(f.num_components()), 0.0);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    const Subset a = Subset::FromMask(n, mask);
    const double total = f.Eval(a);
    if (total <= 0.0) continue;
    for (int i = 0; i < f.num_components(); ++i) {
      p[i] = std::max(p[i], f.EvalComponent(i, a) / total);
    }
  }
  return p;
}

// Vertices of B(f) by brute force: every permutation, exact duplicates
// removed.
inline int BruteExtremeCount(const SubmodularComponent& f) {
  const int n = f.ground_size();
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<std::vector<double>> seen;
  do {
    std::vector<double> y(static_cast<size_t>(n));
    Subset s(n);
    double prev = 0.0;
    for (int e : order) {
      s.Insert(e);
      const double cur = f.Eval(s);
      y[e] = cur - prev;
      prev = cur;
    }
    if (std::find(seen.begin(), seen.end(), y) == seen.end()) seen.push_back(y);
  } while (std::next_permutation(order.begin(), order.end()));
  return static_cast<int>(seen.size());
}

}  // namespace submod::testing

#endif  // SUBMOD_TESTS_TEST_UTIL_HPP_
