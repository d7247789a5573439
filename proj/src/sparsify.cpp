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

#include "submod/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "submod/error.hpp"
#include "submod/random.hpp"

namespace submod {

void SparsifyConfig::Validate() const {
  Require(std::isfinite(epsilon) && epsilon > 0.0, ErrorCode::kInvalidArgument,
          "epsilon must be positive");
  Require(epsilon <= 1.0 || allow_no_guarantee, ErrorCode::kInvalidArgument,
          "epsilon > 1 carries no guarantee; pass the no-guarantee flag to "
          "allow it");
  Require(delta > 0.0 && delta < 1.0, ErrorCode::kInvalidArgument,
          "delta must lie in (0, 1)");
}

namespace {

void CheckKappaDomain(double epsilon, double delta) {
  Require(std::isfinite(epsilon) && epsilon > 0.0, ErrorCode::kInvalidArgument,
          "epsilon must be positive");
  Require(delta > 0.0 && delta < 1.0, ErrorCode::kInvalidArgument,
          "delta must lie in (0, 1)");
}

}  // namespace

double KappaUnconstrained(int n, double epsilon, double delta) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  CheckKappaDomain(epsilon, delta);
  // ln(2^(n+1) / delta) without forming 2^(n+1).
  const double log_term = (n + 1) * std::numbers::ln2 - std::log(delta);
  return 3.0 * log_term / (epsilon * epsilon);
}

double KappaMatroid(int n, int rank, double epsilon, double delta) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  Require(rank >= 1, ErrorCode::kInvalidArgument, "matroid rank must be >= 1");
  CheckKappaDomain(epsilon, delta);
  const double log_term = std::numbers::ln2 +
                          (rank + 1) * std::log(static_cast<double>(n)) -
                          std::log(delta);
  return 3.0 * log_term / (epsilon * epsilon);
}

double KappaFor(int n, const SparsifyConfig& config) {
  if (config.matroid != nullptr) {
    return KappaMatroid(n, config.matroid->rank(), config.epsilon,
                        config.delta);
  }
  return KappaUnconstrained(n, config.epsilon, config.delta);
}

double ExpectedSize(const ImportanceEstimates& estimates, double kappa) {
  double total = 0.0;
  for (double p : estimates.p_hat) total += std::min(1.0, kappa * p);
  return total;
}

SparsifierWeights SampleSparsifier(const ImportanceEstimates& estimates,
                                   double kappa, uint64_t seed) {
  Require(std::isfinite(kappa) && kappa > 0.0, ErrorCode::kInvalidArgument,
          "kappa must be positive");
  const size_t count = estimates.p_hat.size();
  std::vector<double> weights(count, 0.0);
  SamplingRecord record;
  record.seed = seed;
  record.kappa = kappa;
  record.sum_p = estimates.sum_p;
  record.pi_mode = ImportanceModeName(estimates.mode);
  record.probabilities.assign(count, 0.0);
  for (size_t i = 0; i < count; ++i) {
    const double p = estimates.p_hat[i];
    Require(std::isfinite(p) && p >= 0.0, ErrorCode::kInvalidArgument,
            "importance estimates must be finite and nonnegative");
    // p_hat = 0 only for identically-zero components: no flip, weight 0.
    if (p == 0.0) continue;
    const double prob = std::min(1.0, kappa * p);
    record.probabilities[i] = prob;
    if (ToUnit(Substream(seed, i)) < prob) weights[i] = 1.0 / prob;
  }
  return SparsifierWeights(std::move(weights), std::move(record));
}

SparsifierWeights SparsifyWith(const DecomposableFunction& f,
                               const ImportanceEstimates& estimates,
                               const SparsifyConfig& config) {
  config.Validate();
  Require(static_cast<int>(estimates.p_hat.size()) == f.num_components(),
          ErrorCode::kInvalidArgument,
          "estimate count does not match the component count");
  if (config.matroid != nullptr) {
    Require(config.matroid->ground_size() == f.n(), ErrorCode::kInvalidArgument,
            "matroid ground set does not match the function");
  }
  const double kappa = KappaFor(f.n(), config);
  SparsifierWeights sampled = SampleSparsifier(estimates, kappa, config.seed);
  SamplingRecord record = *sampled.record();
  record.epsilon = config.epsilon;
  record.delta = config.delta;
  record.guarantee = config.epsilon <= 1.0;
  return SparsifierWeights(std::vector<double>(sampled.values().begin(),
                                               sampled.values().end()),
                           std::move(record));
}

namespace {

ImportanceEstimates EstimateForFunction(const DecomposableFunction& f,
                                        const SparsifyConfig& config) {
  switch (config.pi_mode) {
    case PiRequest::kExact:
      return PiExact(f);
    case PiRequest::kExactMatroid:
      Require(config.matroid != nullptr, ErrorCode::kIncompatible,
              "exact-matroid mode needs a matroid");
      return PiExactMatroid(f, *config.matroid);
    case PiRequest::kUpper:
      return PiUpperMonotone(f);
    case PiRequest::kClosed:
      Fail(ErrorCode::kIncompatible,
           "closed-form importance needs a coverage or facility instance");
    case PiRequest::kAuto:
      break;
  }
  if (f.n() <= kMaxExactImportanceSize) {
    return config.matroid != nullptr ? PiExactMatroid(f, *config.matroid)
                                     : PiExact(f);
  }
  return PiUpperMonotone(f);
}

}  // namespace

SparsifierWeights Sparsify(const DecomposableFunction& f,
                           const SparsifyConfig& config) {
  config.Validate();
  return SparsifyWith(f, EstimateForFunction(f, config), config);
}

SparsifierWeights SparsifyMatroid(const DecomposableFunction& f,
                                  const Matroid& m,
                                  const SparsifyConfig& config) {
  SparsifyConfig with_matroid = config;
  with_matroid.matroid = &m;
  if (with_matroid.pi_mode == PiRequest::kAuto) {
    with_matroid.pi_mode = PiRequest::kExactMatroid;
  }
  return Sparsify(f, with_matroid);
}

SparsifierWeights Sparsify(const Instance& inst, const SparsifyConfig& config) {
  config.Validate();
  return SparsifyWith(inst.function(),
                      EstimateImportance(inst, config.pi_mode, config.matroid),
                      config);
}

}  // namespace submod
