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
#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "submod/error.hpp"
#include "submod/families.hpp"
#include "test_util.hpp"

namespace submod {
namespace {

using testing::BruteExtremeCount;

// min(|S|, 1) on two elements.
ComponentPtr AnyOfTwo() {
  return MakeTableComponent({2, {0, 1, 1, 1}}, true);
}

SetFunction AsFn(const SubmodularComponent& c) {
  return [&c](const Subset& s) { return c.Eval(s); };
}

TEST(SortingPermutationTest, DescendingWithStableTies) {
  const std::vector<double> x = {0.2, 0.9, 0.2, 0.5};
  EXPECT_EQ(SortingPermutation(x), (std::vector<int>{1, 3, 0, 2}));
}

TEST(LovaszEvalTest, HandExpansion) {
  const ComponentPtr c = AnyOfTwo();
  const std::vector<double> x = {0.7, 0.3};
  EXPECT_NEAR(LovaszEval(AsFn(*c), x), 0.7, 1e-15);
}

TEST(LovaszEvalTest, ZeroPoint) {
  const ComponentPtr c = AnyOfTwo();
  EXPECT_EQ(LovaszEval(AsFn(*c), std::vector<double>{0.0, 0.0}), 0.0);
}

TEST(LovaszEvalTest, ExactlyNPlusOneCalls) {
  int calls = 0;
  const SetFunction f = [&](const Subset& s) {
    ++calls;
    return static_cast<double>(s.size());
  };
  LovaszEval(f, std::vector<double>{0.1, 0.4, 0.4, 1.0});
  EXPECT_EQ(calls, 5);
}

TEST(LovaszEvalTest, RejectsOutOfCube) {
  const ComponentPtr c = AnyOfTwo();
  EXPECT_THROW(LovaszEval(AsFn(*c), std::vector<double>{1.5, 0.0}), Error);
  EXPECT_THROW(LovaszEval(AsFn(*c), std::vector<double>{-0.1, 0.0}), Error);
}

TEST(LovaszEvalTest, CornersReproduceSetValues) {
  const DecomposableFunction f = ToFunction(
      std::make_shared<const HypergraphCutInstance>(
          GenHypergraph(3, 8, 15, 4, Penalty::kQuadratic)));
  const SetFunction fn = [&f](const Subset& s) { return f.Eval(s); };
  std::vector<double> x(8);
  for (uint64_t mask = 0; mask < 256; ++mask) {
    for (int j = 0; j < 8; ++j) x[j] = (mask >> j) & 1U;
    EXPECT_NEAR(LovaszEval(fn, x), f.Eval(Subset::FromMask(8, mask)), 1e-12);
  }
}

// For submodular f, f^L(x) = max over y in B(f) of <y, x>.
TEST(LovaszEvalTest, EqualsSupportFunctionOfBasePolytope) {
  const auto inst = std::make_shared<const FacilityLocationInstance>(
      GenFacility(4, 4, 3, CostLaw::kUniform));
  const ComponentPtr c = MakeFacilityComponent(inst, 1);
  const BasePolytopeReport report = ExtremePoints(*c);
  const std::vector<std::vector<double>> points = {
      {0.3, 0.9, 0.1, 0.5}, {1, 0, 0.25, 0.75}, {0.5, 0.5, 0.5, 0.5}};
  for (const auto& x : points) {
    double best = -1e300;
    for (const auto& y : report.vertices) {
      double dot = 0;
      for (size_t j = 0; j < x.size(); ++j) dot += x[j] * y[j];
      best = std::max(best, dot);
    }
    EXPECT_NEAR(LovaszEval(AsFn(*c), x), best, 1e-12);
  }
}

TEST(ExtremePointsTest, ModularHasOne) {
  EXPECT_EQ(ExtremePoints(*MakeModularCount(4)).extreme_count, 1);
}

TEST(ExtremePointsTest, AnyOfTwoHasTwo) {
  const BasePolytopeReport r = ExtremePoints(*AnyOfTwo());
  ASSERT_EQ(r.extreme_count, 2);
  EXPECT_EQ(r.vertices[0], (std::vector<double>{0, 1}));
  EXPECT_EQ(r.vertices[1], (std::vector<double>{1, 0}));
}

TEST(ExtremePointsTest, CoverageIndicatorCountsCoveringSets) {
  for (int s = 1; s <= 4; ++s) {
    std::vector<std::vector<int>> sets(6);
    for (int a = 0; a < s; ++a) sets[static_cast<size_t>(a)] = {0};
    sets[5] = {1};
    const auto inst = std::make_shared<const CoverageInstance>(
        CoverageInstance::FromSets(2, sets));
    EXPECT_EQ(ExtremePoints(*MakeCoverageComponent(inst, 0)).extreme_count, s);
  }
}

TEST(ExtremePointsTest, MatchesBruteForceAndLiesInPolytope) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = std::make_shared<const HypergraphCutInstance>(
        GenHypergraph(seed, 5, 3, 4, Penalty::kLinear));
    const ComponentPtr c = MakeHypercutComponent(inst, 0);
    const BasePolytopeReport r = ExtremePoints(*c);
    EXPECT_EQ(r.extreme_count, BruteExtremeCount(*c));
    for (const auto& y : r.vertices) EXPECT_TRUE(InBasePolytope(AsFn(*c), y));
  }
}

TEST(ExtremePointsTest, RejectsLargeGround) {
  EXPECT_THROW(ExtremePoints(*MakeModularCount(kMaxExtremePointSize + 1)),
               Error);
}

TEST(InBasePolytopeTest, RejectsPointsOutside) {
  const ComponentPtr c = AnyOfTwo();
  EXPECT_TRUE(InBasePolytope(AsFn(*c), std::vector<double>{0.5, 0.5}));
  EXPECT_FALSE(InBasePolytope(AsFn(*c), std::vector<double>{1.0, 1.0}));
  EXPECT_FALSE(InBasePolytope(AsFn(*c), std::vector<double>{2.0, -1.0}));
}

TEST(MaxExtremeCountTest, TakesMaximumOverComponents) {
  const auto inst = std::make_shared<const CoverageInstance>(
      CoverageInstance::FromSets(2, {{0}, {0, 1}, {0}}));
  EXPECT_EQ(MaxExtremeCount(ToFunction(inst)), 3);
}

}  // namespace
}  // namespace submod
