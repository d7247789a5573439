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

#include "submod/subset.hpp"

#include <algorithm>
#include <sstream>

#include "submod/error.hpp"

namespace submod {

Subset::Subset(int universe_size)
    : n_(universe_size),
      bits_((static_cast<size_t>(std::max(universe_size, 0)) + 63) / 64, 0) {
  Require(universe_size >= 0, ErrorCode::kInvalidArgument,
          "negative universe size");
}

Subset Subset::FromIndices(int universe_size, std::span<const int> indices) {
  Subset s(universe_size);
  for (int e : indices) {
    s.CheckIndex(e);
    s.Insert(e);
  }
  return s;
}

Subset Subset::FromMask(int universe_size, uint64_t mask) {
  Require(universe_size <= 64, ErrorCode::kInvalidArgument,
          "bitmask subsets need n <= 64");
  Require(universe_size == 64 || (mask >> universe_size) == 0,
          ErrorCode::kOutOfRange, "mask has bits beyond the ground set");
  Subset s(universe_size);
  if (universe_size > 0) s.bits_[0] = mask;
  for (int e = 0; e < universe_size; ++e) {
    if ((mask >> e) & 1U) s.members_.push_back(e);
  }
  return s;
}

Subset Subset::Full(int universe_size) {
  Subset s(universe_size);
  for (int e = 0; e < universe_size; ++e) s.Insert(e);
  return s;
}

void Subset::CheckIndex(int e) const {
  if (e < 0 || e >= n_) {
    Fail(ErrorCode::kOutOfRange, "element " + std::to_string(e) +
                                     " outside ground set of size " +
                                     std::to_string(n_));
  }
}

void Subset::Insert(int e) {
  CheckIndex(e);
  if (Contains(e)) return;
  bits_[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63);
  members_.insert(std::lower_bound(members_.begin(), members_.end(), e), e);
}

void Subset::Erase(int e) {
  CheckIndex(e);
  if (!Contains(e)) return;
  bits_[static_cast<size_t>(e) >> 6] &= ~(uint64_t{1} << (e & 63));
  members_.erase(std::lower_bound(members_.begin(), members_.end(), e));
}

void Subset::Toggle(int e) {
  if (Contains(e)) {
    Erase(e);
  } else {
    Insert(e);
  }
}

Subset Subset::With(int e) const {
  Subset copy = *this;
  copy.Insert(e);
  return copy;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  if (other.n_ != n_) return false;
  for (size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

std::string Subset::ToString() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace submod
