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

// Decomposable submodular functions F = sum_i f_i over a shared ground set,
// their reweighted forms F' = sum_i w_i f_i, and exhaustive diagnostics.

#ifndef SUBMOD_CORE_MODEL_HPP_
#define SUBMOD_CORE_MODEL_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "submod/subset.hpp"

namespace submod {

// Exhaustive checks enumerate every subset; beyond this they refuse.
inline constexpr int kMaxExhaustiveCheckSize = 10;

struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // empty or exactly n entries

  explicit GroundSet(int size, std::vector<std::string> names = {});
};

// One nonnegative, normalized set function on {0, ..., n-1}.
class SubmodularComponent {
 public:
  virtual ~SubmodularComponent() = default;

  virtual int ground_size() const = 0;
  virtual double Eval(const Subset& s) const = 0;
  // Declared by the family, never inferred.
  virtual bool monotone_claim() const = 0;
};

using ComponentPtr = std::shared_ptr<const SubmodularComponent>;
using SetFunction = std::function<double(const Subset&)>;

// Record of how a weight vector was sampled.
struct SamplingRecord {
  uint64_t seed = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  double kappa = 0.0;
  double sum_p = 0.0;
  std::string pi_mode;
  bool guarantee = true;
  // Inclusion probability min(1, kappa * p_i) per component.
  std::vector<double> probabilities;
};

class SparsifierWeights {
 public:
  SparsifierWeights() = default;
  // Throws kInvalidArgument on negative or non-finite entries.
  explicit SparsifierWeights(std::vector<double> weights,
                             std::optional<SamplingRecord> record = {});
  static SparsifierWeights Ones(int count);

  int length() const { return static_cast<int>(weights_.size()); }
  // Number of strictly positive entries.
  int size() const { return static_cast<int>(support_.size()); }
  double operator[](int i) const { return weights_[static_cast<size_t>(i)]; }
  std::span<const double> values() const { return weights_; }
  std::span<const int> support() const { return support_; }
  const std::optional<SamplingRecord>& record() const { return record_; }

 private:
  std::vector<double> weights_;
  std::vector<int> support_;
  std::optional<SamplingRecord> record_;
};

class DecomposableFunction {
 public:
  // Rejects an empty component list, mismatched ground sets, and any
  // component with f(empty) != 0.
  DecomposableFunction(GroundSet ground, std::vector<ComponentPtr> components);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n; }
  int num_components() const { return static_cast<int>(components_.size()); }
  const SubmodularComponent& component(int i) const;
  std::span<const ComponentPtr> components() const { return components_; }
  bool all_monotone() const { return all_monotone_; }

  // f_i(S).
  double EvalComponent(int i, const Subset& s) const;
  // F(S) = sum_i f_i(S).
  double Eval(const Subset& s) const;
  // F'(S) = sum_i w_i f_i(S), touching only the support of w.
  double EvalWeighted(const SparsifierWeights& w, const Subset& s) const;

  // Throws kOutOfRange unless s lives on this ground set.
  void CheckSubset(const Subset& s) const;

 private:
  GroundSet ground_;
  std::vector<ComponentPtr> components_;
  bool all_monotone_ = true;
};

// F(A + a) - F(A). Throws kInvalidArgument when a is already in A.
double MarginalGain(const SetFunction& f, int a, const Subset& a_set);

// Set-function view of F or F' that counts calls and component evaluations.
// Counters are atomic so one objective may be shared across workers.
class CountingObjective {
 public:
  explicit CountingObjective(const DecomposableFunction& f);
  CountingObjective(const DecomposableFunction& f, const SparsifierWeights& w);

  double operator()(const Subset& s) const;
  SetFunction AsSetFunction() const;

  uint64_t calls() const { return calls_.load(); }
  uint64_t component_evals() const { return component_evals_.load(); }

 private:
  const DecomposableFunction* f_;
  const SparsifierWeights* w_ = nullptr;
  mutable std::atomic<uint64_t> calls_{0};
  mutable std::atomic<uint64_t> component_evals_{0};
};

struct SubmodularityCheck {
  bool ok = true;
  // First violating triple f(S+e)-f(S) < f(T+e)-f(T), S subset of T, e not in T.
  Subset s;
  Subset t;
  int e = -1;
};

struct MonotonicityCheck {
  bool ok = true;
  // f(S+e) < f(S).
  Subset s;
  int e = -1;
};

// Exhaustive over all S subset of T and e outside T; n <= 10.
SubmodularityCheck CheckSubmodular(const SetFunction& f, int n,
                                   double tolerance = 1e-12);
SubmodularityCheck CheckSubmodular(const SubmodularComponent& f,
                                   double tolerance = 1e-12);
MonotonicityCheck CheckMonotone(const SetFunction& f, int n,
                                double tolerance = 1e-12);
MonotonicityCheck CheckMonotone(const SubmodularComponent& f,
                                double tolerance = 1e-12);

}  // namespace submod

#endif  // SUBMOD_CORE_MODEL_HPP_
