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

#ifndef SUBMOD_RANDOM_HPP_
#define SUBMOD_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace submod {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent 64-bit stream key for (seed, index). Used wherever a loop must
// give the same draws no matter how its iterations are scheduled.
constexpr uint64_t Substream(uint64_t seed, uint64_t index) {
  return Mix64(seed ^ Mix64(index ^ 0xD1B54A32D192ED03ULL));
}

// Top 53 bits mapped to [0, 1).
constexpr double ToUnit(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Seeded generator with portable draws. The std distributions are
// implementation-defined, so the conversions live here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(Mix64(seed)) {}

  uint64_t Next() { return engine_(); }
  double Uniform() { return ToUnit(engine_()); }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, bound).
  uint64_t Below(uint64_t bound);

  // Standard normal via Box-Muller.
  double Normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace submod

#endif  // SUBMOD_RANDOM_HPP_
