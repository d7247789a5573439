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

#ifndef SUBMOD_MATROID_HPP_
#define SUBMOD_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "submod/subset.hpp"

namespace submod {

inline constexpr uint64_t kDefaultEnumerationBudget = 1'000'000;

class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;
  virtual bool IsIndependent(const Subset& s) const = 0;
  virtual int rank() const = 0;
  virtual std::string Describe() const = 0;
};

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int n, int k);

  int ground_size() const override { return n_; }
  bool IsIndependent(const Subset& s) const override;
  int rank() const override;
  std::string Describe() const override;
  int capacity() const { return k_; }

 private:
  int n_;
  int k_;
};

class PartitionMatroid : public Matroid {
 public:
  // `blocks` must partition {0, ..., n-1}.
  PartitionMatroid(int n, std::vector<std::vector<int>> blocks,
                   std::vector<int> capacities);

  int ground_size() const override { return n_; }
  bool IsIndependent(const Subset& s) const override;
  int rank() const override;
  std::string Describe() const override;

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

// Number of nonempty independent sets, stopping once `limit` is passed.
uint64_t CountIndependent(const Matroid& m, uint64_t limit);

// Visits every nonempty independent set exactly once, in lexicographic order
// of sorted member lists. Throws kBudgetExceeded before visiting anything when
// the count is above `budget`.
void ForEachIndependent(const Matroid& m,
                        const std::function<void(const Subset&)>& visit,
                        uint64_t budget = kDefaultEnumerationBudget);
std::vector<Subset> EnumerateIndependent(
    const Matroid& m, uint64_t budget = kDefaultEnumerationBudget);

struct MatroidAxiomCheck {
  bool ok = true;
  std::string violation;
};

// Downward closure, exchange, and rank consistency by brute force (n <= 8).
MatroidAxiomCheck CheckMatroidAxioms(const Matroid& m);

}  // namespace submod

#endif  // SUBMOD_MATROID_HPP_
