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

#include "submod/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "submod/error.hpp"

namespace submod {

GroundSet::GroundSet(int size, std::vector<std::string> names)
    : n(size), labels(std::move(names)) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "ground set must be nonempty");
  Require(labels.empty() || static_cast<int>(labels.size()) == n,
          ErrorCode::kInvalidArgument, "label count must equal n");
}

SparsifierWeights::SparsifierWeights(std::vector<double> weights,
                                     std::optional<SamplingRecord> record)
    : weights_(std::move(weights)), record_(std::move(record)) {
  for (size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    Require(std::isfinite(w) && w >= 0.0, ErrorCode::kInvalidArgument,
            "weight " + std::to_string(i) + " is negative or not finite");
    if (w > 0.0) support_.push_back(static_cast<int>(i));
  }
}

SparsifierWeights SparsifierWeights::Ones(int count) {
  return SparsifierWeights(std::vector<double>(static_cast<size_t>(count), 1.0));
}

DecomposableFunction::DecomposableFunction(GroundSet ground,
                                           std::vector<ComponentPtr> components)
    : ground_(std::move(ground)), components_(std::move(components)) {
  Require(!components_.empty(), ErrorCode::kInvalidArgument,
          "a decomposable function needs at least one component");
  const Subset empty(ground_.n);
  for (size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    Require(c != nullptr, ErrorCode::kInvalidArgument, "null component");
    Require(c->ground_size() == ground_.n, ErrorCode::kInvalidArgument,
            "component " + std::to_string(i) + " has a different ground set");
    Require(c->Eval(empty) == 0.0, ErrorCode::kInvalidArgument,
            "component " + std::to_string(i) + " is not normalized (f(empty) != 0)");
    all_monotone_ = all_monotone_ && c->monotone_claim();
  }
}

const SubmodularComponent& DecomposableFunction::component(int i) const {
  Require(i >= 0 && i < num_components(), ErrorCode::kOutOfRange,
          "component index " + std::to_string(i) + " out of range");
  return *components_[static_cast<size_t>(i)];
}

void DecomposableFunction::CheckSubset(const Subset& s) const {
  Require(s.universe_size() == ground_.n, ErrorCode::kOutOfRange,
          "subset lives on a ground set of size " +
              std::to_string(s.universe_size()) + ", expected " +
              std::to_string(ground_.n));
}

double DecomposableFunction::EvalComponent(int i, const Subset& s) const {
  CheckSubset(s);
  return component(i).Eval(s);
}

double DecomposableFunction::Eval(const Subset& s) const {
  CheckSubset(s);
  double total = 0.0;
  for (const auto& c : components_) total += c->Eval(s);
  return total;
}

double DecomposableFunction::EvalWeighted(const SparsifierWeights& w,
                                          const Subset& s) const {
  Require(w.length() == num_components(), ErrorCode::kInvalidArgument,
          "weight vector length " + std::to_string(w.length()) +
              " does not match " + std::to_string(num_components()) +
              " components");
  CheckSubset(s);
  double total = 0.0;
  for (int i : w.support()) {
    total += w[i] * components_[static_cast<size_t>(i)]->Eval(s);
  }
  return total;
}

double MarginalGain(const SetFunction& f, int a, const Subset& a_set) {
  Require(!a_set.Contains(a), ErrorCode::kInvalidArgument,
          "element " + std::to_string(a) + " already in the set");
  return f(a_set.With(a)) - f(a_set);
}

CountingObjective::CountingObjective(const DecomposableFunction& f) : f_(&f) {}

CountingObjective::CountingObjective(const DecomposableFunction& f,
                                     const SparsifierWeights& w)
    : f_(&f), w_(&w) {
  Require(w.length() == f.num_components(), ErrorCode::kInvalidArgument,
          "weight vector length does not match the component count");
}

double CountingObjective::operator()(const Subset& s) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  if (w_ == nullptr) {
    component_evals_.fetch_add(static_cast<uint64_t>(f_->num_components()),
                               std::memory_order_relaxed);
    return f_->Eval(s);
  }
  component_evals_.fetch_add(static_cast<uint64_t>(w_->size()),
                             std::memory_order_relaxed);
  return f_->EvalWeighted(*w_, s);
}

SetFunction CountingObjective::AsSetFunction() const {
  return [this](const Subset& s) { return (*this)(s); };
}

namespace {

std::vector<double> TabulateAll(const SetFunction& f, int n) {
  Require(n >= 1 && n <= kMaxExhaustiveCheckSize, ErrorCode::kInvalidArgument,
          "exhaustive check needs 1 <= n <= " +
              std::to_string(kMaxExhaustiveCheckSize));
  const uint64_t count = uint64_t{1} << n;
  std::vector<double> values(count);
  for (uint64_t mask = 0; mask < count; ++mask) {
    values[mask] = f(Subset::FromMask(n, mask));
  }
  return values;
}

double Scale(const std::vector<double>& values) {
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  return scale;
}

SetFunction Bind(const SubmodularComponent& f) {
  return [&f](const Subset& s) { return f.Eval(s); };
}

}  // namespace

SubmodularityCheck CheckSubmodular(const SetFunction& f, int n,
                                   double tolerance) {
  const std::vector<double> v = TabulateAll(f, n);
  const double slack = tolerance * Scale(v);
  const uint64_t full = (uint64_t{1} << n) - 1;
  for (uint64_t t = 0; t <= full; ++t) {
    for (int e = 0; e < n; ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if (t & bit) continue;
      const double gain_t = v[t | bit] - v[t];
      // All submasks s of t, including t itself and 0.
      uint64_t s = t;
      while (true) {
        const double gain_s = v[s | bit] - v[s];
        if (gain_s < gain_t - slack) {
          SubmodularityCheck result;
          result.ok = false;
          result.s = Subset::FromMask(n, s);
          result.t = Subset::FromMask(n, t);
          result.e = e;
          return result;
        }
        if (s == 0) break;
        s = (s - 1) & t;
      }
    }
  }
  return {};
}

SubmodularityCheck CheckSubmodular(const SubmodularComponent& f,
                                   double tolerance) {
  return CheckSubmodular(Bind(f), f.ground_size(), tolerance);
}

MonotonicityCheck CheckMonotone(const SetFunction& f, int n, double tolerance) {
  const std::vector<double> v = TabulateAll(f, n);
  const double slack = tolerance * Scale(v);
  const uint64_t full = (uint64_t{1} << n) - 1;
  for (uint64_t s = 0; s <= full; ++s) {
    for (int e = 0; e < n; ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if (s & bit) continue;
      if (v[s | bit] < v[s] - slack) {
        MonotonicityCheck result;
        result.ok = false;
        result.s = Subset::FromMask(n, s);
        result.e = e;
        return result;
      }
    }
  }
  return {};
}

MonotonicityCheck CheckMonotone(const SubmodularComponent& f,
                                double tolerance) {
  return CheckMonotone(Bind(f), f.ground_size(), tolerance);
}

}  // namespace submod
