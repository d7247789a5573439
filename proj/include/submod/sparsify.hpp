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

// Importance sampling of components. Each component i survives independently
// with probability k_i = min(1, kappa * p_hat_i) and then carries weight
// 1 / k_i, so E[w_i] = 1 and E[F'(S)] = F(S).

#ifndef SUBMOD_SPARSIFY_HPP_
#define SUBMOD_SPARSIFY_HPP_

#include <cstdint>

#include "submod/core_model.hpp"
#include "submod/importance.hpp"
#include "submod/matroid.hpp"

namespace submod {

struct SparsifyConfig {
  double epsilon = 0.5;
  double delta = 0.1;
  uint64_t seed = 0;
  PiRequest pi_mode = PiRequest::kAuto;
  // epsilon > 1 is rejected unless set; the result then carries
  // guarantee = false.
  bool allow_no_guarantee = false;
  const Matroid* matroid = nullptr;

  void Validate() const;
};

// 3 ln(2^(n+1) / delta) / epsilon^2, natural log.
double KappaUnconstrained(int n, double epsilon, double delta);

// 3 ln(2 n^(r+1) / delta) / epsilon^2 for a matroid of rank r.
double KappaMatroid(int n, int rank, double epsilon, double delta);

// Per-component coin flips; flip i uses Substream(seed, i), so the result
// does not depend on iteration order or worker count. Components with
// p_hat_i == 0 get weight 0 without a flip.
SparsifierWeights SampleSparsifier(const ImportanceEstimates& estimates,
                                   double kappa, uint64_t seed);

// Estimates importance per config.pi_mode (closed forms need an Instance,
// see below), picks the unconstrained or rank-based kappa, and samples.
SparsifierWeights Sparsify(const DecomposableFunction& f,
                           const SparsifyConfig& config);
SparsifierWeights SparsifyMatroid(const DecomposableFunction& f,
                                  const Matroid& m,
                                  const SparsifyConfig& config);

// Same, with precomputed estimates (reused across trials).
SparsifierWeights SparsifyWith(const DecomposableFunction& f,
                               const ImportanceEstimates& estimates,
                               const SparsifyConfig& config);

SparsifierWeights Sparsify(const Instance& inst, const SparsifyConfig& config);

// kappa for this config: rank-based when config.matroid is set.
double KappaFor(int n, const SparsifyConfig& config);

// sum_i min(1, kappa * p_hat_i) = E[size(w)].
double ExpectedSize(const ImportanceEstimates& estimates, double kappa);

}  // namespace submod

#endif  // SUBMOD_SPARSIFY_HPP_
