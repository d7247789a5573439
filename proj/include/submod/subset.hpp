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

#ifndef SUBMOD_SUBSET_HPP_
#define SUBMOD_SUBSET_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace submod {

// A subset of the ground set {0, ..., n-1}. Keeps both a bitmap (O(1)
// membership) and the sorted member list (cheap iteration for families whose
// value depends only on the members, e.g. facility location).
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe_size);

  // Throws kOutOfRange for any index outside [0, n). Duplicates collapse.
  static Subset FromIndices(int universe_size, std::span<const int> indices);
  // Bit j of `mask` selects element j. Requires n <= 64.
  static Subset FromMask(int universe_size, uint64_t mask);
  static Subset Full(int universe_size);

  int universe_size() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool Contains(int e) const {
    return (bits_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1U;
  }
  void Insert(int e);
  void Erase(int e);
  void Toggle(int e);

  // Copy with `e` added.
  Subset With(int e) const;

  std::span<const int> members() const { return members_; }
  std::vector<int> Indices() const { return members_; }
  // Low 64 membership bits.
  uint64_t LowMask() const { return bits_.empty() ? 0 : bits_[0]; }
  bool IsSubsetOf(const Subset& other) const;

  std::string ToString() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  void CheckIndex(int e) const;

  int n_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<int> members_;
};

}  // namespace submod

#endif  // SUBMOD_SUBSET_HPP_
