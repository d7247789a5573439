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

// Ground-truth checks of (1 - eps) F'(S) <= F(S) <= (1 + eps) F'(S).
//
// Ratios are always F(S) / F'(S). A set with F'(S) = 0 < F(S) has ratio
// +inf and fails; F(S) = F'(S) = 0 is counted and passes without moving the
// worst ratios.

#ifndef SUBMOD_VERIFY_HPP_
#define SUBMOD_VERIFY_HPP_

#include <cstdint>
#include <vector>

#include "submod/core_model.hpp"
#include "submod/matroid.hpp"
#include "submod/sparsify.hpp"

namespace submod {

inline constexpr int kMaxVerifySize = 20;
// Absolute slack on the ratio bounds for floating-point summation noise.
inline constexpr double kRatioSlack = 1e-12;

struct VerificationReport {
  bool pass = true;
  double epsilon = 0.0;
  double worst_low = 1.0;
  double worst_high = 1.0;
  Subset witness_low;
  Subset witness_high;
  // Set only by the continuous check when the extreme is at a sampled x.
  std::vector<double> witness_low_point;
  std::vector<double> witness_high_point;
  uint64_t sets_checked = 0;
};

// Every nonempty subset, visited in increasing bitmask order. n <= 20.
VerificationReport VerifyAllSubsets(const DecomposableFunction& f,
                                    const SparsifierWeights& w,
                                    double epsilon);

// Nonempty independent sets of `m` only.
VerificationReport VerifyMatroid(const DecomposableFunction& f,
                                 const SparsifierWeights& w, double epsilon,
                                 const Matroid& m,
                                 uint64_t budget = kDefaultEnumerationBudget);

// Lovasz extensions at `samples` uniform x in [0,1]^n, plus every corner
// 1_S when n <= 10.
VerificationReport VerifyLovasz(const DecomposableFunction& f,
                                const SparsifierWeights& w, double epsilon,
                                int samples, uint64_t seed);

struct TrialStats {
  int trials = 0;
  int successes = 0;
  double mean_size = 0.0;
  double size_stderr = 0.0;
  // sum_i min(1, kappa p_hat_i): the expected size.
  double expected_size = 0.0;
  // kappa * sum_i p_hat_i: the unclamped bound.
  double kappa_sum_p = 0.0;
  std::vector<int> sizes;
  std::vector<bool> passed;
};

// Trial t samples with seed config.seed + t from one shared set of
// estimates and verifies over all subsets (or the matroid's independent sets
// when config.matroid is set). Trials run in parallel; results are indexed
// by trial so they do not depend on scheduling.
TrialStats RunTrials(const DecomposableFunction& f,
                     const ImportanceEstimates& estimates,
                     const SparsifyConfig& config, int trials);
TrialStats RunTrials(const DecomposableFunction& f,
                     const SparsifyConfig& config, int trials);

}  // namespace submod

#endif  // SUBMOD_VERIFY_HPP_
