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

#ifndef SUBMOD_OPTIMIZE_HPP_
#define SUBMOD_OPTIMIZE_HPP_

#include <cstdint>
#include <vector>

#include "submod/core_model.hpp"

namespace submod {

struct GreedyTrace {
  std::vector<int> chosen;    // in pick order
  std::vector<double> gains;  // marginal gain of each pick
  uint64_t evals = 0;         // set-function evaluations
  double value = 0.0;         // f(chosen), accumulated from the gains

  Subset ChosenSet(int n) const;
};

// Standard greedy under |A| <= k. Ties go to the lowest index. f(empty) is
// taken as 0, so evals <= k * n.
GreedyTrace GreedyCardinality(const SetFunction& f, int n, int k);

// Lazy greedy with stale upper bounds. Picks the same sequence as
// GreedyCardinality on monotone submodular objectives.
GreedyTrace LazyGreedy(const SetFunction& f, int n, int k);

struct BruteOptResult {
  Subset best;
  double value = 0.0;
  uint64_t sets_checked = 0;
};

inline constexpr uint64_t kBruteOptBudget = 1'000'000;

// Exact max over |S| <= k. The first maximizer in lexicographic order of
// sorted member lists wins. Throws kBudgetExceeded when sum_{j<=k} C(n,j) is
// above `budget`.
BruteOptResult BruteOpt(const SetFunction& f, int n, int k,
                        uint64_t budget = kBruteOptBudget);

}  // namespace submod

#endif  // SUBMOD_OPTIMIZE_HPP_
