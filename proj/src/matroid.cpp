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

#include "submod/matroid.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "submod/error.hpp"

namespace submod {

UniformMatroid::UniformMatroid(int n, int k) : n_(n), k_(k) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "matroid needs n >= 1");
  Require(k >= 0, ErrorCode::kInvalidArgument, "capacity must be >= 0");
}

bool UniformMatroid::IsIndependent(const Subset& s) const {
  Require(s.universe_size() == n_, ErrorCode::kOutOfRange,
          "subset is not on the matroid's ground set");
  return s.size() <= k_;
}

int UniformMatroid::rank() const { return std::min(k_, n_); }

std::string UniformMatroid::Describe() const {
  return "uniform(n=" + std::to_string(n_) + ",k=" + std::to_string(k_) + ")";
}

PartitionMatroid::PartitionMatroid(int n, std::vector<std::vector<int>> blocks,
                                   std::vector<int> capacities)
    : n_(n),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(static_cast<size_t>(std::max(n, 0)), -1) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "matroid needs n >= 1");
  Require(blocks_.size() == capacities_.size(), ErrorCode::kInvalidArgument,
          "one capacity per block");
  for (size_t b = 0; b < blocks_.size(); ++b) {
    Require(capacities_[b] >= 0, ErrorCode::kInvalidArgument,
            "capacities must be >= 0");
    std::sort(blocks_[b].begin(), blocks_[b].end());
    for (int e : blocks_[b]) {
      Require(e >= 0 && e < n, ErrorCode::kOutOfRange,
              "block element " + std::to_string(e) + " out of range");
      Require(block_of_[static_cast<size_t>(e)] == -1,
              ErrorCode::kInvalidArgument,
              "element " + std::to_string(e) + " appears in two blocks");
      block_of_[static_cast<size_t>(e)] = static_cast<int>(b);
    }
  }
  for (int e = 0; e < n; ++e) {
    Require(block_of_[static_cast<size_t>(e)] != -1, ErrorCode::kInvalidArgument,
            "element " + std::to_string(e) + " is in no block");
  }
}

bool PartitionMatroid::IsIndependent(const Subset& s) const {
  Require(s.universe_size() == n_, ErrorCode::kOutOfRange,
          "subset is not on the matroid's ground set");
  std::vector<int> used(blocks_.size(), 0);
  for (int e : s.members()) {
    const auto b = static_cast<size_t>(block_of_[static_cast<size_t>(e)]);
    if (++used[b] > capacities_[b]) return false;
  }
  return true;
}

int PartitionMatroid::rank() const {
  int r = 0;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    r += std::min(capacities_[b], static_cast<int>(blocks_[b].size()));
  }
  return r;
}

std::string PartitionMatroid::Describe() const {
  return "partition(n=" + std::to_string(n_) +
         ",blocks=" + std::to_string(blocks_.size()) +
         ",rank=" + std::to_string(rank()) + ")";
}

namespace {

// Depth-first over increasing elements. Downward closure makes pruning at
// the first dependent prefix exact.
template <typename Visit>
bool Walk(const Matroid& m, Subset& current, int start, Visit& visit) {
  for (int e = start; e < m.ground_size(); ++e) {
    current.Insert(e);
    if (m.IsIndependent(current)) {
      if (!visit(current)) return false;
      if (!Walk(m, current, e + 1, visit)) return false;
    }
    current.Erase(e);
  }
  return true;
}

}  // namespace

uint64_t CountIndependent(const Matroid& m, uint64_t limit) {
  uint64_t count = 0;
  Subset current(m.ground_size());
  auto visit = [&](const Subset&) { return ++count <= limit; };
  Walk(m, current, 0, visit);
  return count;
}

void ForEachIndependent(const Matroid& m,
                        const std::function<void(const Subset&)>& visit,
                        uint64_t budget) {
  const uint64_t count = CountIndependent(m, budget);
  if (count > budget) {
    Fail(ErrorCode::kBudgetExceeded,
         "more than " + std::to_string(budget) + " independent sets in " +
             m.Describe());
  }
  Subset current(m.ground_size());
  auto wrapped = [&](const Subset& s) {
    visit(s);
    return true;
  };
  Walk(m, current, 0, wrapped);
}

std::vector<Subset> EnumerateIndependent(const Matroid& m, uint64_t budget) {
  std::vector<Subset> out;
  ForEachIndependent(m, [&](const Subset& s) { out.push_back(s); }, budget);
  return out;
}

MatroidAxiomCheck CheckMatroidAxioms(const Matroid& m) {
  const int n = m.ground_size();
  Require(n <= 8, ErrorCode::kInvalidArgument,
          "axiom check is exhaustive and needs n <= 8");
  const uint64_t count = uint64_t{1} << n;
  std::vector<bool> indep(count);
  int max_size = 0;
  for (uint64_t mask = 0; mask < count; ++mask) {
    indep[mask] = m.IsIndependent(Subset::FromMask(n, mask));
    if (indep[mask]) max_size = std::max(max_size, std::popcount(mask));
  }
  MatroidAxiomCheck result;
  auto fail = [&](std::string why) {
    result.ok = false;
    result.violation = std::move(why);
    return result;
  };
  if (!indep[0]) return fail("empty set is dependent");
  for (uint64_t a = 0; a < count; ++a) {
    if (!indep[a]) continue;
    for (int e = 0; e < n; ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if ((a & bit) && !indep[a & ~bit]) {
        return fail("downward closure fails at " +
                    Subset::FromMask(n, a).ToString());
      }
    }
    for (uint64_t b = 0; b < count; ++b) {
      if (!indep[b] || std::popcount(b) <= std::popcount(a)) continue;
      bool extended = false;
      for (int e = 0; e < n && !extended; ++e) {
        const uint64_t bit = uint64_t{1} << e;
        extended = (b & bit) && !(a & bit) && indep[a | bit];
      }
      if (!extended) {
        return fail("exchange fails for " + Subset::FromMask(n, a).ToString() +
                    " and " + Subset::FromMask(n, b).ToString());
      }
    }
  }
  if (max_size != m.rank()) return fail("rank disagrees with brute force");
  return result;
}

}  // namespace submod
