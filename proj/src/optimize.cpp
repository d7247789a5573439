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

#include "submod/optimize.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "submod/error.hpp"

namespace submod {

Subset GreedyTrace::ChosenSet(int n) const {
  return Subset::FromIndices(n, chosen);
}

namespace {

void CheckArgs(int n, int k) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "ground set must be nonempty");
  Require(k >= 1, ErrorCode::kInvalidArgument,
          "k must be >= 1, got " + std::to_string(k));
}

}  // namespace

GreedyTrace GreedyCardinality(const SetFunction& f, int n, int k) {
  CheckArgs(n, k);
  GreedyTrace trace;
  Subset current(n);
  double current_value = 0.0;
  const int steps = std::min(k, n);
  for (int step = 0; step < steps; ++step) {
    int best = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    double best_value = 0.0;
    for (int e = 0; e < n; ++e) {
      if (current.Contains(e)) continue;
      current.Insert(e);
      const double value = f(current);
      current.Erase(e);
      ++trace.evals;
      const double gain = value - current_value;
      if (gain > best_gain) {
        best = e;
        best_gain = gain;
        best_value = value;
      }
    }
    current.Insert(best);
    current_value = best_value;
    trace.chosen.push_back(best);
    trace.gains.push_back(best_gain);
  }
  trace.value = current_value;
  return trace;
}

GreedyTrace LazyGreedy(const SetFunction& f, int n, int k) {
  CheckArgs(n, k);
  struct Entry {
    double gain;
    double value;  // f(A + e) at the time the gain was computed
    int element;
    int stamp;     // pick round the gain belongs to
  };
  // Largest gain first; ties go to the lower index, matching the plain scan.
  auto lower = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.element > b.element;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);

  GreedyTrace trace;
  Subset current(n);
  double current_value = 0.0;
  for (int e = 0; e < n; ++e) {
    current.Insert(e);
    const double value = f(current);
    current.Erase(e);
    ++trace.evals;
    heap.push({value, value, e, 0});
  }
  const int steps = std::min(k, n);
  for (int round = 0; round < steps; ++round) {
    while (true) {
      Entry top = heap.top();
      heap.pop();
      if (top.stamp == round) {
        current.Insert(top.element);
        current_value = top.value;
        trace.chosen.push_back(top.element);
        trace.gains.push_back(top.gain);
        break;
      }
      current.Insert(top.element);
      const double value = f(current);
      current.Erase(top.element);
      ++trace.evals;
      heap.push({value - current_value, value, top.element, round});
    }
  }
  trace.value = current_value;
  return trace;
}

namespace {

uint64_t SubsetCountUpTo(int n, int k, uint64_t cap) {
  uint64_t total = 0;
  uint64_t binom = 1;  // C(n, j)
  for (int j = 0; j <= k && j <= n; ++j) {
    if (j > 0) {
      // C(n, j) = C(n, j-1) * (n - j + 1) / j; saturate past the cap.
      const unsigned __int128 next =
          static_cast<unsigned __int128>(binom) * static_cast<unsigned>(n - j + 1) / j;
      binom = next > cap ? cap + 1 : static_cast<uint64_t>(next);
    }
    total += binom;
    if (total > cap) return cap + 1;
  }
  return total;
}

void LexWalk(const SetFunction& f, int n, int k, int start, Subset& current,
             BruteOptResult& result) {
  if (current.size() == k) return;
  for (int e = start; e < n; ++e) {
    current.Insert(e);
    const double value = f(current);
    ++result.sets_checked;
    if (value > result.value) {
      result.value = value;
      result.best = current;
    }
    LexWalk(f, n, k, e + 1, current, result);
    current.Erase(e);
  }
}

}  // namespace

BruteOptResult BruteOpt(const SetFunction& f, int n, int k, uint64_t budget) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "ground set must be nonempty");
  Require(k >= 0, ErrorCode::kInvalidArgument, "k must be >= 0");
  if (SubsetCountUpTo(n, k, budget) > budget) {
    Fail(ErrorCode::kBudgetExceeded,
         "brute force over |S| <= " + std::to_string(k) + " of n = " +
             std::to_string(n) + " exceeds " + std::to_string(budget) +
             " sets");
  }
  BruteOptResult result;
  Subset current(n);
  result.best = current;
  result.value = f(current);
  result.sets_checked = 1;
  LexWalk(f, n, k, 0, current, result);
  return result;
}

}  // namespace submod
