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

#include "submod/importance.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "submod/error.hpp"

namespace submod {

std::string ImportanceModeName(ImportanceMode mode) {
  switch (mode) {
    case ImportanceMode::kExact:
      return "exact";
    case ImportanceMode::kExactMatroid:
      return "exact-matroid";
    case ImportanceMode::kClosedCoverage:
      return "closed-coverage";
    case ImportanceMode::kClosedFacility:
      return "closed-facility";
    case ImportanceMode::kUpperMonotone:
      return "upper-monotone";
  }
  return "?";
}

ImportanceEstimates::ImportanceEstimates(std::vector<double> values,
                                         ImportanceMode m)
    : p_hat(std::move(values)),
      mode(m),
      sum_p(std::accumulate(p_hat.begin(), p_hat.end(), 0.0)) {}

namespace {

// Folds one evaluated set into the running maxima. Returns whether F(A) > 0.
bool Accumulate(const DecomposableFunction& f, const Subset& a,
                std::vector<double>& values, std::vector<double>& best) {
  const auto components = f.components();
  double total = 0.0;
  for (size_t i = 0; i < components.size(); ++i) {
    values[i] = components[i]->Eval(a);
    total += values[i];
  }
  // F(A) = 0 forces every f_i(A) = 0; the ratio is taken as 0.
  if (total <= 0.0) return false;
  for (size_t i = 0; i < components.size(); ++i) {
    best[i] = std::max(best[i], values[i] / total);
  }
  return true;
}

}  // namespace

ImportanceEstimates PiExact(const DecomposableFunction& f) {
  const int n = f.n();
  Require(n <= kMaxExactImportanceSize, ErrorCode::kBudgetExceeded,
          "exact importance needs n <= " +
              std::to_string(kMaxExactImportanceSize) + ", got " +
              std::to_string(n));
  const auto count = static_cast<size_t>(f.num_components());
  std::vector<double> values(count), best(count, 0.0);
  Subset current(n);
  bool any_positive = false;
  const uint64_t limit = uint64_t{1} << n;
  // Gray code: step k flips element ctz(k).
  for (uint64_t k = 1; k < limit; ++k) {
    current.Toggle(std::countr_zero(k));
    any_positive = Accumulate(f, current, values, best) || any_positive;
  }
  Require(any_positive, ErrorCode::kInvalidArgument,
          "F is identically zero; importance is undefined");
  return ImportanceEstimates(std::move(best), ImportanceMode::kExact);
}

ImportanceEstimates PiExactMatroid(const DecomposableFunction& f,
                                   const Matroid& m, uint64_t budget) {
  Require(m.ground_size() == f.n(), ErrorCode::kInvalidArgument,
          "matroid ground set does not match the function");
  const auto count = static_cast<size_t>(f.num_components());
  std::vector<double> values(count), best(count, 0.0);
  bool any_positive = false;
  ForEachIndependent(
      m,
      [&](const Subset& a) {
        any_positive = Accumulate(f, a, values, best) || any_positive;
      },
      budget);
  Require(any_positive, ErrorCode::kInvalidArgument,
          "F is zero on every independent set; importance is undefined");
  return ImportanceEstimates(std::move(best), ImportanceMode::kExactMatroid);
}

ImportanceEstimates PiCoverage(const CoverageInstance& inst) {
  const std::vector<int> sizes = inst.SetSizes();
  std::vector<double> p(inst.covers.size(), 0.0);
  for (size_t i = 0; i < inst.covers.size(); ++i) {
    Require(!inst.covers[i].empty(), ErrorCode::kInvalidArgument,
            "universe element " + std::to_string(i) + " is uncovered");
    int smallest = sizes[static_cast<size_t>(inst.covers[i].front())];
    for (int a : inst.covers[i]) {
      smallest = std::min(smallest, sizes[static_cast<size_t>(a)]);
    }
    p[i] = 1.0 / smallest;
  }
  return ImportanceEstimates(std::move(p), ImportanceMode::kClosedCoverage);
}

ImportanceEstimates PiFacility(const FacilityLocationInstance& inst) {
  const auto n = static_cast<size_t>(inst.n_facilities);
  std::vector<double> column(n, 0.0);
  for (int i = 0; i < inst.n_clients; ++i) {
    const auto row = inst.Row(i);
    for (size_t j = 0; j < n; ++j) column[j] += row[j];
  }
  Require(std::any_of(column.begin(), column.end(),
                      [](double c) { return c > 0.0; }),
          ErrorCode::kInvalidArgument, "every facility column is zero");
  std::vector<double> p(static_cast<size_t>(inst.n_clients), 0.0);
  for (int i = 0; i < inst.n_clients; ++i) {
    const auto row = inst.Row(i);
    double best = 0.0;
    for (size_t j = 0; j < n; ++j) {
      if (column[j] > 0.0) best = std::max(best, row[j] / column[j]);
    }
    p[static_cast<size_t>(i)] = best;
  }
  return ImportanceEstimates(std::move(p), ImportanceMode::kClosedFacility);
}

ImportanceEstimates PiUpperMonotone(const DecomposableFunction& f) {
  for (int i = 0; i < f.num_components(); ++i) {
    Require(f.component(i).monotone_claim(), ErrorCode::kIncompatible,
            "component " + std::to_string(i) +
                " is not declared monotone; the singleton bound does not apply");
  }
  const int n = f.n();
  const auto count = static_cast<size_t>(f.num_components());
  std::vector<double> values(count), best(count, 0.0);
  bool any_positive = false;
  Subset single(n);
  for (int e = 0; e < n; ++e) {
    single.Insert(e);
    any_positive = Accumulate(f, single, values, best) || any_positive;
    single.Erase(e);
  }
  Require(any_positive, ErrorCode::kInvalidArgument,
          "F is zero on every singleton; importance is undefined");
  for (double& p : best) p *= n;
  return ImportanceEstimates(std::move(best), ImportanceMode::kUpperMonotone);
}

PiRequest ParsePiRequest(const std::string& name) {
  if (name == "auto") return PiRequest::kAuto;
  if (name == "exact") return PiRequest::kExact;
  if (name == "exact-matroid") return PiRequest::kExactMatroid;
  if (name == "closed") return PiRequest::kClosed;
  if (name == "upper") return PiRequest::kUpper;
  Fail(ErrorCode::kParse, "unknown pi mode '" + name +
                              "' (auto, exact, exact-matroid, closed, upper)");
}

std::string PiRequestName(PiRequest request) {
  switch (request) {
    case PiRequest::kAuto:
      return "auto";
    case PiRequest::kExact:
      return "exact";
    case PiRequest::kExactMatroid:
      return "exact-matroid";
    case PiRequest::kClosed:
      return "closed";
    case PiRequest::kUpper:
      return "upper";
  }
  return "?";
}

ImportanceEstimates EstimateImportance(const Instance& inst, PiRequest request,
                                       const Matroid* matroid) {
  const DecomposableFunction& f = inst.function();
  switch (request) {
    case PiRequest::kExact:
      return PiExact(f);
    case PiRequest::kExactMatroid:
      Require(matroid != nullptr, ErrorCode::kIncompatible,
              "exact-matroid mode needs a matroid");
      return PiExactMatroid(f, *matroid);
    case PiRequest::kClosed:
      if (const auto* c = inst.coverage()) return PiCoverage(*c);
      if (const auto* fl = inst.facility()) return PiFacility(*fl);
      Fail(ErrorCode::kIncompatible,
           "closed-form importance exists only for coverage and facility "
           "instances, not " + inst.type_name());
    case PiRequest::kUpper:
      return PiUpperMonotone(f);
    case PiRequest::kAuto:
      break;
  }
  if (matroid != nullptr && f.n() <= kMaxExactImportanceSize) {
    return PiExactMatroid(f, *matroid);
  }
  if (const auto* c = inst.coverage()) return PiCoverage(*c);
  if (const auto* fl = inst.facility()) return PiFacility(*fl);
  if (f.n() <= kMaxExactImportanceSize) return PiExact(f);
  return PiUpperMonotone(f);
}

}  // namespace submod
