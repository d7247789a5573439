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

#include "submod/lovasz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "submod/error.hpp"

namespace submod {

std::vector<int> SortingPermutation(std::span<const double> x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });
  return order;
}

double LovaszEval(const SetFunction& f, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  Require(n >= 1, ErrorCode::kInvalidArgument, "empty point");
  for (double v : x) {
    Require(v >= 0.0 && v <= 1.0, ErrorCode::kInvalidArgument,
            "Lovasz extension is defined on [0, 1]^n");
  }
  const std::vector<int> order = SortingPermutation(x);
  Subset prefix(n);
  double total = 0.0;
  double upper = 1.0;  // x_pi(0)
  for (int j = 0; j <= n; ++j) {
    const double lower = j < n ? x[static_cast<size_t>(order[static_cast<size_t>(j)])] : 0.0;
    total += (upper - lower) * f(prefix);
    if (j < n) prefix.Insert(order[static_cast<size_t>(j)]);
    upper = lower;
  }
  return total;
}

BasePolytopeReport ExtremePoints(const SetFunction& f, int n) {
  Require(n >= 1 && n <= kMaxExtremePointSize, ErrorCode::kInvalidArgument,
          "extreme-point enumeration needs 1 <= n <= " +
              std::to_string(kMaxExtremePointSize));
  // Tabulate once; each permutation then costs n lookups.
  const uint64_t count = uint64_t{1} << n;
  std::vector<double> values(count);
  for (uint64_t mask = 0; mask < count; ++mask) {
    values[mask] = f(Subset::FromMask(n, mask));
  }
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<double>> vertices;
  do {
    std::vector<double> y(static_cast<size_t>(n));
    uint64_t mask = 0;
    for (int e : order) {
      const uint64_t next = mask | (uint64_t{1} << e);
      y[static_cast<size_t>(e)] = values[next] - values[mask];
      mask = next;
    }
    vertices.push_back(std::move(y));
  } while (std::next_permutation(order.begin(), order.end()));

  std::sort(vertices.begin(), vertices.end());
  auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) > 1e-12) return false;
    }
    return true;
  };
  BasePolytopeReport report;
  for (auto& v : vertices) {
    if (report.vertices.empty() || !close(report.vertices.back(), v)) {
      report.vertices.push_back(std::move(v));
    }
  }
  report.extreme_count = static_cast<int>(report.vertices.size());
  return report;
}

BasePolytopeReport ExtremePoints(const SubmodularComponent& f) {
  return ExtremePoints([&f](const Subset& s) { return f.Eval(s); },
                       f.ground_size());
}

bool InBasePolytope(const SetFunction& f, std::span<const double> y,
                    double tolerance) {
  const int n = static_cast<int>(y.size());
  Require(n >= 1 && n <= 20, ErrorCode::kInvalidArgument,
          "base polytope membership is checked exhaustively (n <= 20)");
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t mask = 1; mask < count; ++mask) {
    double sum = 0.0;
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1U) sum += y[static_cast<size_t>(e)];
    }
    const double value = f(Subset::FromMask(n, mask));
    if (sum > value + tolerance) return false;
    if (mask == count - 1 && std::abs(sum - value) > tolerance) return false;
  }
  return true;
}

int MaxExtremeCount(const DecomposableFunction& f) {
  int best = 0;
  for (int i = 0; i < f.num_components(); ++i) {
    BasePolytopeReport r = ExtremePoints(f.component(i));
    best = std::max(best, r.extreme_count);
  }
  return best;
}

}  // namespace submod
