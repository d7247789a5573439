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

#ifndef SUBMOD_LOVASZ_HPP_
#define SUBMOD_LOVASZ_HPP_

#include <span>
#include <vector>

#include "submod/core_model.hpp"

namespace submod {

inline constexpr int kMaxExtremePointSize = 8;

// Descending order of x; equal coordinates keep ascending index order.
std::vector<int> SortingPermutation(std::span<const double> x);

// f^L(x) = sum_{j=0..n} (x_pi(j) - x_pi(j+1)) f(S_j) with x_pi(0) = 1,
// x_pi(n+1) = 0 and S_j the first j elements of the sort. Exactly n + 1
// calls to f. Throws kInvalidArgument when a coordinate leaves [0, 1].
double LovaszEval(const SetFunction& f, std::span<const double> x);

struct BasePolytopeReport {
  int component = -1;
  int extreme_count = 0;
  std::vector<std::vector<double>> vertices;  // lexicographically sorted
};

// Greedy vertices y_pi(j) = f(S_j) - f(S_{j-1}) over all n! orders,
// deduplicated at 1e-12. n <= 8.
BasePolytopeReport ExtremePoints(const SetFunction& f, int n);
BasePolytopeReport ExtremePoints(const SubmodularComponent& f);

// y(S) <= f(S) for every S and y(E) = f(E), up to `tolerance`.
bool InBasePolytope(const SetFunction& f, std::span<const double> y,
                    double tolerance = 1e-9);

// max_i |B(f_i)|.
int MaxExtremeCount(const DecomposableFunction& f);

}  // namespace submod

#endif  // SUBMOD_LOVASZ_HPP_
