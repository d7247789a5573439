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

// Greedy-on-sparsifier runs and epsilon sweeps.

#ifndef SUBMOD_EXPERIMENT_HPP_
#define SUBMOD_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "submod/core_model.hpp"
#include "submod/families.hpp"
#include "submod/importance.hpp"
#include "submod/optimize.hpp"

namespace submod {

struct MaximizeReport {
  int k = 0;
  bool weighted = false;
  int sparsifier_size = 0;
  int num_components = 0;
  // Greedy on F' (equal to the full run when unweighted).
  std::vector<int> chosen_sparse;
  double value_sparse_on_sparse = 0.0;  // F'(A)
  double value_sparse_on_full = 0.0;    // F(A)
  uint64_t evals_sparse = 0;
  uint64_t component_evals_sparse = 0;
  // Greedy on F.
  std::vector<int> chosen_full;
  double value_full = 0.0;
  uint64_t evals_full = 0;
  uint64_t component_evals_full = 0;
};

MaximizeReport RunMaximize(const DecomposableFunction& f,
                           const SparsifierWeights* w, int k, bool lazy);
std::string MaximizeReportToJson(const MaximizeReport& report);

struct BenchConfig {
  std::vector<double> epsilons = {0.25, 0.5, 1.0, 2.0, 4.0};
  int trials = 20;
  int k = 8;
  double delta = 0.2;
  uint64_t seed = 0;
  PiRequest pi_mode = PiRequest::kAuto;
  bool lazy = false;
};

struct BenchRow {
  double epsilon = 0.0;
  int trial = 0;
  int sparsifier_size = 0;
  double relative_size = 0.0;
  double greedy_value_sparse = 0.0;  // greedy-on-F' set evaluated on F
  double greedy_value_full = 0.0;
  double relative_quality = 0.0;
  double runtime_sparse_ms = 0.0;
  double runtime_full_ms = 0.0;
};

// One row per (epsilon, trial), in input order of epsilons then trial.
// Trial (e, t) samples with Substream(seed, e * trials + t). Importance is
// estimated once; the full greedy runs once and its time is repeated on
// every row.
std::vector<BenchRow> RunBench(const Instance& inst, const BenchConfig& config);

// Header plus one line per row. The two runtime columns are wall-clock and
// the only nondeterministic fields.
std::string BenchToCsv(const std::vector<BenchRow>& rows);

}  // namespace submod

#endif  // SUBMOD_EXPERIMENT_HPP_
