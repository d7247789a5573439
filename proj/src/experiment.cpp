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

#include "submod/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "submod/error.hpp"
#include "submod/parallel.hpp"
#include "submod/random.hpp"
#include "submod/sparsify.hpp"

namespace submod {

namespace {

GreedyTrace RunGreedy(const SetFunction& f, int n, int k, bool lazy) {
  return lazy ? LazyGreedy(f, n, k) : GreedyCardinality(f, n, k);
}

double Millis(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

MaximizeReport RunMaximize(const DecomposableFunction& f,
                           const SparsifierWeights* w, int k, bool lazy) {
  Require(k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
  MaximizeReport report;
  report.k = k;
  report.num_components = f.num_components();

  const CountingObjective full(f);
  const GreedyTrace full_trace = RunGreedy(full.AsSetFunction(), f.n(), k, lazy);
  report.chosen_full = full_trace.chosen;
  report.value_full = full_trace.value;
  report.evals_full = full.calls();
  report.component_evals_full = full.component_evals();

  if (w == nullptr) {
    report.sparsifier_size = f.num_components();
    report.chosen_sparse = report.chosen_full;
    report.value_sparse_on_sparse = report.value_full;
    report.value_sparse_on_full = report.value_full;
    report.evals_sparse = report.evals_full;
    report.component_evals_sparse = report.component_evals_full;
    return report;
  }
  report.weighted = true;
  report.sparsifier_size = w->size();
  const CountingObjective sparse(f, *w);
  const GreedyTrace sparse_trace =
      RunGreedy(sparse.AsSetFunction(), f.n(), k, lazy);
  report.chosen_sparse = sparse_trace.chosen;
  report.value_sparse_on_sparse = sparse_trace.value;
  report.value_sparse_on_full = f.Eval(sparse_trace.ChosenSet(f.n()));
  report.evals_sparse = sparse.calls();
  report.component_evals_sparse = sparse.component_evals();
  return report;
}

std::string MaximizeReportToJson(const MaximizeReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["weighted"] = r.weighted;
  j["num_components"] = r.num_components;
  j["sparsifier_size"] = r.sparsifier_size;
  j["sparse"] = {{"chosen", r.chosen_sparse},
                 {"value_on_sparsifier", r.value_sparse_on_sparse},
                 {"value_on_full", r.value_sparse_on_full},
                 {"evals", r.evals_sparse},
                 {"component_evals", r.component_evals_sparse}};
  j["full"] = {{"chosen", r.chosen_full},
               {"value", r.value_full},
               {"evals", r.evals_full},
               {"component_evals", r.component_evals_full}};
  return j.dump(2) + "\n";
}

std::vector<BenchRow> RunBench(const Instance& inst, const BenchConfig& config) {
  Require(config.trials >= 1, ErrorCode::kInvalidArgument,
          "trials must be >= 1");
  Require(config.k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
  Require(!config.epsilons.empty(), ErrorCode::kInvalidArgument,
          "need at least one epsilon");
  const DecomposableFunction& f = inst.function();
  const ImportanceEstimates estimates =
      EstimateImportance(inst, config.pi_mode);

  const auto full_start = std::chrono::steady_clock::now();
  const CountingObjective full(f);
  const GreedyTrace full_trace =
      RunGreedy(full.AsSetFunction(), f.n(), config.k, config.lazy);
  const double full_ms = Millis(std::chrono::steady_clock::now() - full_start);

  const size_t per_eps = static_cast<size_t>(config.trials);
  std::vector<BenchRow> rows(config.epsilons.size() * per_eps);
  ParallelFor(rows.size(), [&](size_t index) {
    const size_t e = index / per_eps;
    const int trial = static_cast<int>(index % per_eps);
    SparsifyConfig sc;
    sc.epsilon = config.epsilons[e];
    sc.delta = config.delta;
    sc.seed = Substream(config.seed, index);
    sc.allow_no_guarantee = true;
    const SparsifierWeights w = SparsifyWith(f, estimates, sc);

    const auto start = std::chrono::steady_clock::now();
    const CountingObjective sparse(f, w);
    const GreedyTrace trace =
        RunGreedy(sparse.AsSetFunction(), f.n(), config.k, config.lazy);
    const double sparse_ms = Millis(std::chrono::steady_clock::now() - start);

    BenchRow& row = rows[index];
    row.epsilon = sc.epsilon;
    row.trial = trial;
    row.sparsifier_size = w.size();
    row.relative_size = static_cast<double>(w.size()) / f.num_components();
    row.greedy_value_sparse = f.Eval(trace.ChosenSet(f.n()));
    row.greedy_value_full = full_trace.value;
    row.relative_quality = full_trace.value > 0.0
                               ? row.greedy_value_sparse / full_trace.value
                               : 1.0;
    row.runtime_sparse_ms = sparse_ms;
    row.runtime_full_ms = full_ms;
  });
  return rows;
}

std::string BenchToCsv(const std::vector<BenchRow>& rows) {
  std::string out =
      "epsilon,trial,sparsifier_size,relative_size,greedy_value_sparse,"
      "greedy_value_full,relative_quality,runtime_sparse_ms,runtime_full_ms\n";
  char line[512];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%.17g,%d,%d,%.17g,%.17g,%.17g,%.17g,%.3f,%.3f\n", r.epsilon,
                  r.trial, r.sparsifier_size, r.relative_size,
                  r.greedy_value_sparse, r.greedy_value_full,
                  r.relative_quality, r.runtime_sparse_ms, r.runtime_full_ms);
    out += line;
  }
  return out;
}

}  // namespace submod
