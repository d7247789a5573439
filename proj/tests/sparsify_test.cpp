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

#include "submod/sparsify.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "submod/error.hpp"
#include "submod/families.hpp"
#include "submod/importance.hpp"
#include "submod/matroid.hpp"
#include "submod/random.hpp"
#include "submod/verify.hpp"
#include "test_util.hpp"

namespace submod {
namespace {

TEST(KappaTest, UnconstrainedArithmetic) {
  EXPECT_NEAR(KappaUnconstrained(4, 1.0, 0.5), 3.0 * std::log(64.0), 1e-12);
  EXPECT_NEAR(KappaUnconstrained(4, 1.0, 0.5), 12.4766, 1e-4);
  EXPECT_NEAR(KappaUnconstrained(1, 1.0, 1.0 - 1e-9), 3.0 * std::log(4.0),
              1e-8);
}

TEST(KappaTest, UnconstrainedMonotonicity) {
  EXPECT_LT(KappaUnconstrained(8, 0.5, 0.2), KappaUnconstrained(8, 0.5, 0.1));
  EXPECT_NEAR(KappaUnconstrained(8, 0.25, 0.2),
              4.0 * KappaUnconstrained(8, 0.5, 0.2), 1e-9);
}

TEST(KappaTest, MatroidArithmetic) {
  EXPECT_NEAR(KappaMatroid(16, 2, 1.0, 0.5),
              3.0 * std::log(2.0 * 16 * 16 * 16 / 0.5), 1e-12);
  EXPECT_NEAR(KappaMatroid(16, 2, 1.0, 0.5), 3.0 * std::log(16384.0), 1e-12);
  EXPECT_LT(KappaMatroid(16, 2, 1.0, 0.5), KappaUnconstrained(16, 1.0, 0.5));
  EXPECT_NEAR(KappaMatroid(2, 1, 1.0, 0.5), 3.0 * std::log(16.0), 1e-12);
}

TEST(KappaTest, RejectsBadParameters) {
  EXPECT_THROW(KappaUnconstrained(0, 0.5, 0.1), Error);
  EXPECT_THROW(KappaUnconstrained(4, 0.0, 0.1), Error);
  EXPECT_THROW(KappaUnconstrained(4, 0.5, 1.0), Error);
  EXPECT_THROW(KappaMatroid(4, 0, 0.5, 0.1), Error);
}

TEST(SparsifyConfigTest, LargeEpsilonNeedsFlag) {
  SparsifyConfig config;
  config.epsilon = 2.0;
  EXPECT_THROW(config.Validate(), Error);
  config.allow_no_guarantee = true;
  EXPECT_NO_THROW(config.Validate());
}

TEST(SampleSparsifierTest, ClampedGivesAllOnes) {
  const ImportanceEstimates est({0.5, 0.25, 1.0}, ImportanceMode::kExact);
  const SparsifierWeights w = SampleSparsifier(est, 4.0, 99);
  EXPECT_EQ(w.size(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(w[i], 1.0);
}

TEST(SampleSparsifierTest, SingleComponentKeepsWeightOne) {
  const ImportanceEstimates est({1.0}, ImportanceMode::kExact);
  EXPECT_EQ(SampleSparsifier(est, 1.0, 3)[0], 1.0);
}

TEST(SampleSparsifierTest, ZeroImportanceGetsZeroWeight) {
  const ImportanceEstimates est({0.0, 1.0}, ImportanceMode::kExact);
  const SparsifierWeights w = SampleSparsifier(est, 10.0, 3);
  EXPECT_EQ(w[0], 0.0);
  EXPECT_EQ(w.record()->probabilities[0], 0.0);
}

TEST(SampleSparsifierTest, FollowsSubstreamDraws) {
  std::vector<double> p(50);
  for (size_t i = 0; i < p.size(); ++i) p[i] = 0.001 * static_cast<double>(i + 1);
  const ImportanceEstimates est(p, ImportanceMode::kExact);
  const double kappa = 7.5;
  const SparsifierWeights w = SampleSparsifier(est, kappa, 1234);
  for (size_t i = 0; i < p.size(); ++i) {
    const double prob = std::min(1.0, kappa * p[i]);
    const bool keep = ToUnit(Substream(1234, i)) < prob;
    EXPECT_EQ(w[static_cast<int>(i)], keep ? 1.0 / prob : 0.0);
  }
}

TEST(SampleSparsifierTest, MeanWeightIsOne) {
  const ImportanceEstimates est({0.05, 0.3}, ImportanceMode::kExact);
  const double kappa = 2.0;
  const int seeds = 10000;
  for (int i = 0; i < 2; ++i) {
    const double prob = kappa * est.p_hat[i];
    double sum = 0.0;
    for (int s = 0; s < seeds; ++s) sum += SampleSparsifier(est, kappa, s)[i];
    const double mean = sum / seeds;
    // Var(w) = (1 - q) / q for a weight of 1/q kept with probability q.
    const double stderr_ = std::sqrt((1.0 - prob) / prob / seeds);
    EXPECT_NEAR(mean, 1.0, 3.0 * stderr_) << "component " << i;
  }
}

TEST(SparsifyTest, Deterministic) {
  const Instance inst(GenCoverage(3, 8, 200, 0.8));
  SparsifyConfig config;
  config.seed = 17;
  const SparsifierWeights a = Sparsify(inst, config);
  const SparsifierWeights b = Sparsify(inst, config);
  EXPECT_EQ(std::vector<double>(a.values().begin(), a.values().end()),
            std::vector<double>(b.values().begin(), b.values().end()));
}

TEST(SparsifyTest, RecordsConfig) {
  const Instance inst(GenCoverage(3, 8, 200, 0.8));
  SparsifyConfig config;
  config.epsilon = 0.5;
  config.delta = 0.2;
  config.seed = 5;
  const SparsifierWeights w = Sparsify(inst, config);
  const SamplingRecord& r = *w.record();
  EXPECT_EQ(r.seed, 5u);
  EXPECT_EQ(r.epsilon, 0.5);
  EXPECT_EQ(r.delta, 0.2);
  EXPECT_EQ(r.kappa, KappaUnconstrained(8, 0.5, 0.2));
  EXPECT_EQ(r.pi_mode, "closed-coverage");
  EXPECT_TRUE(r.guarantee);
  // Every nonzero weight is exactly 1 / min(1, kappa p_hat).
  const ImportanceEstimates est = PiCoverage(*inst.coverage());
  for (int i = 0; i < w.length(); ++i) {
    if (w[i] == 0.0) continue;
    EXPECT_EQ(w[i], 1.0 / std::min(1.0, r.kappa * est.p_hat[i]));
  }
}

TEST(SparsifyTest, NoGuaranteeRecorded) {
  const Instance inst(GenCoverage(3, 8, 200, 0.8));
  SparsifyConfig config;
  config.epsilon = 4.0;
  config.allow_no_guarantee = true;
  EXPECT_FALSE(Sparsify(inst, config).record()->guarantee);
}

TEST(SparsifyTest, ClampedReproducesFunction) {
  const Instance inst(GenCoverage(1, 6, 20, 0.5));
  SparsifyConfig config;
  config.epsilon = 0.05;
  const SparsifierWeights w = Sparsify(inst, config);
  const DecomposableFunction& f = inst.function();
  ASSERT_EQ(w.size(), f.num_components());
  for (uint64_t mask = 0; mask < 64; ++mask) {
    const Subset s = Subset::FromMask(6, mask);
    EXPECT_EQ(f.EvalWeighted(w, s), f.Eval(s));
  }
}

TEST(SparsifyTest, MeanSizeMatchesExpectation) {
  const DecomposableFunction f = ToFunction(
      std::make_shared<const CoverageInstance>(GenCoverage(11, 8, 200, 0.8)));
  SparsifyConfig config;
  config.epsilon = 0.5;
  config.delta = 0.2;
  config.pi_mode = PiRequest::kExact;
  const ImportanceEstimates est = PiExact(f);
  const double kappa = KappaUnconstrained(8, 0.5, 0.2);
  double total = 0.0;
  for (int s = 0; s < 500; ++s) {
    config.seed = static_cast<uint64_t>(s);
    total += SparsifyWith(f, est, config).size();
  }
  const double mean = total / 500;
  EXPECT_LE(mean, kappa * est.sum_p);
  double var = 0.0;
  for (double p : est.p_hat) {
    const double q = std::min(1.0, kappa * p);
    var += q * (1 - q);
  }
  EXPECT_NEAR(mean, ExpectedSize(est, kappa), 3.0 * std::sqrt(var / 500));
}

TEST(SparsifyMatroidTest, VerifiedOnIndependentSetsOnly) {
  const DecomposableFunction f = ToFunction(
      std::make_shared<const CoverageInstance>(GenCoverage(2, 8, 200, 0.8)));
  const UniformMatroid m(8, 2);
  SparsifyConfig config;
  config.epsilon = 0.5;
  config.delta = 0.2;
  config.seed = 3;
  const SparsifierWeights w = SparsifyMatroid(f, m, config);
  EXPECT_EQ(w.record()->pi_mode, "exact-matroid");
  EXPECT_EQ(w.record()->kappa, KappaMatroid(8, 2, 0.5, 0.2));
  const VerificationReport report = VerifyMatroid(f, w, 0.5, m);
  EXPECT_EQ(report.sets_checked, 8u + 28u);
}

TEST(SparsifyTest, ModeCompatibility) {
  const DecomposableFunction hyp = ToFunction(
      std::make_shared<const HypergraphCutInstance>(
          GenHypergraph(1, 6, 10, 3, Penalty::kLinear)));
  SparsifyConfig config;
  config.pi_mode = PiRequest::kClosed;
  EXPECT_THROW(Sparsify(hyp, config), Error);
  config.pi_mode = PiRequest::kUpper;
  EXPECT_THROW(Sparsify(hyp, config), Error);
  config.pi_mode = PiRequest::kExactMatroid;
  EXPECT_THROW(Sparsify(hyp, config), Error);
}

}  // namespace
}  // namespace submod
