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

#include "submod/verify.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "submod/error.hpp"
#include "submod/lovasz.hpp"
#include "submod/parallel.hpp"
#include "submod/random.hpp"

namespace submod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class RatioTracker {
 public:
  explicit RatioTracker(double epsilon) { report_.epsilon = epsilon; }

  void Observe(double full, double sparse, const Subset& s,
               std::span<const double> point = {}) {
    ++report_.sets_checked;
    if (full == 0.0 && sparse == 0.0) return;
    const double ratio = sparse > 0.0 ? full / sparse : kInf;
    if (ratio < low_) {
      low_ = ratio;
      report_.witness_low = s;
      report_.witness_low_point.assign(point.begin(), point.end());
    }
    if (ratio > high_) {
      high_ = ratio;
      report_.witness_high = s;
      report_.witness_high_point.assign(point.begin(), point.end());
    }
  }

  VerificationReport Finish() {
    if (low_ != kInf) report_.worst_low = low_;
    if (high_ != -kInf) report_.worst_high = high_;
    const double eps = report_.epsilon;
    report_.pass = report_.worst_low >= 1.0 - eps - kRatioSlack &&
                   report_.worst_high <= 1.0 + eps + kRatioSlack;
    return report_;
  }

 private:
  VerificationReport report_;
  double low_ = kInf;
  double high_ = -kInf;
};

// F(S) and F'(S) from one pass over the components.
struct PairEvaluator {
  const DecomposableFunction& f;
  const SparsifierWeights& w;

  std::pair<double, double> operator()(const Subset& s) const {
    double full = 0.0;
    double sparse = 0.0;
    const auto components = f.components();
    for (size_t i = 0; i < components.size(); ++i) {
      const double v = components[i]->Eval(s);
      full += v;
      const double wi = w[static_cast<int>(i)];
      if (wi > 0.0) sparse += wi * v;
    }
    return {full, sparse};
  }
};

void CheckInputs(const DecomposableFunction& f, const SparsifierWeights& w,
                 double epsilon) {
  Require(w.length() == f.num_components(), ErrorCode::kInvalidArgument,
          "weight vector length does not match the component count");
  Require(std::isfinite(epsilon) && epsilon >= 0.0, ErrorCode::kInvalidArgument,
          "epsilon must be >= 0");
}

}  // namespace

VerificationReport VerifyAllSubsets(const DecomposableFunction& f,
                                    const SparsifierWeights& w,
                                    double epsilon) {
  CheckInputs(f, w, epsilon);
  const int n = f.n();
  Require(n <= kMaxVerifySize, ErrorCode::kBudgetExceeded,
          "all-subset verification needs n <= " +
              std::to_string(kMaxVerifySize) + ", got " + std::to_string(n));
  RatioTracker tracker(epsilon);
  const PairEvaluator eval{f, w};
  const uint64_t limit = uint64_t{1} << n;
  for (uint64_t mask = 1; mask < limit; ++mask) {
    const Subset s = Subset::FromMask(n, mask);
    const auto [full, sparse] = eval(s);
    tracker.Observe(full, sparse, s);
  }
  return tracker.Finish();
}

VerificationReport VerifyMatroid(const DecomposableFunction& f,
                                 const SparsifierWeights& w, double epsilon,
                                 const Matroid& m, uint64_t budget) {
  CheckInputs(f, w, epsilon);
  Require(m.ground_size() == f.n(), ErrorCode::kInvalidArgument,
          "matroid ground set does not match the function");
  RatioTracker tracker(epsilon);
  const PairEvaluator eval{f, w};
  ForEachIndependent(
      m,
      [&](const Subset& s) {
        const auto [full, sparse] = eval(s);
        tracker.Observe(full, sparse, s);
      },
      budget);
  return tracker.Finish();
}

VerificationReport VerifyLovasz(const DecomposableFunction& f,
                                const SparsifierWeights& w, double epsilon,
                                int samples, uint64_t seed) {
  CheckInputs(f, w, epsilon);
  Require(samples >= 1, ErrorCode::kInvalidArgument, "samples must be >= 1");
  const int n = f.n();
  const SetFunction full = [&f](const Subset& s) { return f.Eval(s); };
  const SetFunction sparse = [&f, &w](const Subset& s) {
    return f.EvalWeighted(w, s);
  };
  RatioTracker tracker(epsilon);
  if (n <= kMaxExhaustiveCheckSize) {
    std::vector<double> corner(static_cast<size_t>(n));
    const uint64_t limit = uint64_t{1} << n;
    for (uint64_t mask = 1; mask < limit; ++mask) {
      for (int j = 0; j < n; ++j) corner[static_cast<size_t>(j)] = (mask >> j) & 1U;
      tracker.Observe(LovaszEval(full, corner), LovaszEval(sparse, corner),
                      Subset::FromMask(n, mask));
    }
  }
  Rng rng(seed);
  std::vector<double> x(static_cast<size_t>(n));
  const Subset none(n);
  for (int t = 0; t < samples; ++t) {
    for (double& v : x) v = rng.Uniform();
    tracker.Observe(LovaszEval(full, x), LovaszEval(sparse, x), none, x);
  }
  return tracker.Finish();
}

TrialStats RunTrials(const DecomposableFunction& f,
                     const ImportanceEstimates& estimates,
                     const SparsifyConfig& config, int trials) {
  Require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be >= 1");
  config.Validate();
  TrialStats stats;
  stats.trials = trials;
  stats.sizes.assign(static_cast<size_t>(trials), 0);
  std::vector<char> passed(static_cast<size_t>(trials), 0);
  ParallelFor(static_cast<size_t>(trials), [&](size_t t) {
    SparsifyConfig trial = config;
    trial.seed = config.seed + t;
    const SparsifierWeights w = SparsifyWith(f, estimates, trial);
    const VerificationReport report =
        config.matroid != nullptr
            ? VerifyMatroid(f, w, config.epsilon, *config.matroid)
            : VerifyAllSubsets(f, w, config.epsilon);
    stats.sizes[t] = w.size();
    passed[t] = report.pass ? 1 : 0;
  });
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    sum += stats.sizes[static_cast<size_t>(t)];
    stats.successes += passed[static_cast<size_t>(t)];
    stats.passed.push_back(passed[static_cast<size_t>(t)] != 0);
  }
  stats.mean_size = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (int size : stats.sizes) {
      ss += (size - stats.mean_size) * (size - stats.mean_size);
    }
    stats.size_stderr = std::sqrt(ss / (trials - 1)) / std::sqrt(trials);
  }
  const double kappa = KappaFor(f.n(), config);
  stats.expected_size = ExpectedSize(estimates, kappa);
  stats.kappa_sum_p = kappa * estimates.sum_p;
  return stats;
}

TrialStats RunTrials(const DecomposableFunction& f,
                     const SparsifyConfig& config, int trials) {
  config.Validate();
  ImportanceEstimates estimates;
  if (config.pi_mode == PiRequest::kUpper) {
    estimates = PiUpperMonotone(f);
  } else if (config.matroid != nullptr) {
    estimates = PiExactMatroid(f, *config.matroid);
  } else {
    estimates = PiExact(f);
  }
  return RunTrials(f, estimates, config, trials);
}

}  // namespace submod
