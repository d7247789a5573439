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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Usage: submod_acceptance <path-to-cli>.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "submod/core_model.hpp"
#include "submod/experiment.hpp"
#include "submod/families.hpp"
#include "submod/importance.hpp"
#include "submod/io.hpp"
#include "submod/lovasz.hpp"
#include "submod/matroid.hpp"
#include "submod/optimize.hpp"
#include "submod/random.hpp"
#include "submod/sparsify.hpp"
#include "submod/verify.hpp"

namespace submod {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// The lower edge of a 3-sigma binomial band around 1 - delta.
double PassRateFloor(double delta, int trials) {
  const double q = 1.0 - delta;
  return q - 3.0 * std::sqrt(q * delta / trials);
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Shared configuration for the sandwich, size, Lovasz and unbiasedness
// criteria: 8 sets over 200 elements.
constexpr uint64_t kBaseSeed = 2026;
constexpr double kEps = 0.5;
constexpr double kDelta = 0.2;

const DecomposableFunction& BaseFunction() {
  static const DecomposableFunction f =
      ToFunction(std::make_shared<const CoverageInstance>(
          GenCoverage(kBaseSeed, 8, 200, 0.8)));
  return f;
}

SparsifyConfig BaseConfig() {
  SparsifyConfig config;
  config.epsilon = kEps;
  config.delta = kDelta;
  config.seed = 1000;
  config.pi_mode = PiRequest::kExact;
  return config;
}

Outcome SandwichProbability() {
  const auto start = Clock::now();
  const DecomposableFunction& f = BaseFunction();
  const int trials = 200;
  const TrialStats stats = RunTrials(f, PiExact(f), BaseConfig(), trials);
  const double rate = static_cast<double>(stats.successes) / trials;
  const double floor = PassRateFloor(kDelta, trials);
  const double secs = Seconds(start);
  return {rate >= floor && secs < 60.0,
          Fmt("pass rate %.3f (%d/%d) >= %.4f; mean size %.1f of %d; %.2fs",
              rate, stats.successes, trials, floor, stats.mean_size,
              f.num_components(), secs)};
}

Outcome SizeExpectation() {
  const auto start = Clock::now();
  const DecomposableFunction& f = BaseFunction();
  const ImportanceEstimates exact = PiExact(f);
  const int trials = 500;
  const TrialStats stats = RunTrials(f, exact, BaseConfig(), trials);
  const double gap = std::abs(stats.mean_size - stats.expected_size);
  const bool within = gap <= 3.0 * stats.size_stderr;
  const bool sum_ok = exact.sum_p <= 8.0;
  const double secs = Seconds(start);
  return {within && sum_ok && secs < 60.0,
          Fmt("mean size %.2f vs expected %.2f (|gap| %.2f <= 3*se %.2f); "
              "sum p %.4f <= 8; %.2fs",
              stats.mean_size, stats.expected_size, gap,
              3.0 * stats.size_stderr, exact.sum_p, secs)};
}

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = a.size() == b.size() ? 0.0 : INFINITY;
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

Outcome ClosedFormCorrectness() {
  const auto start = Clock::now();
  double worst = 0.0;
  int mismatches = 0;
  for (uint64_t t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(t % 7);
    const double density = 0.2 + 0.15 * static_cast<double>(t % 5);
    const CoverageInstance cov = GenCoverage(
        Substream(31, t), n, 20 + static_cast<int>(t), std::max(density, 1.0 / n));
    const double d = MaxAbsDiff(
        PiCoverage(cov).p_hat,
        PiExact(ToFunction(std::make_shared<const CoverageInstance>(cov))).p_hat);
    worst = std::max(worst, d);
    mismatches += d > 1e-12;
  }
  for (uint64_t t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(t % 7);
    const CostLaw law = t % 2 ? CostLaw::kUniform : CostLaw::kClustered;
    const FacilityLocationInstance fac =
        GenFacility(Substream(37, t), n, 10 + static_cast<int>(t), law);
    const double d = MaxAbsDiff(
        PiFacility(fac).p_hat,
        PiExact(ToFunction(std::make_shared<const FacilityLocationInstance>(fac)))
            .p_hat);
    worst = std::max(worst, d);
    mismatches += d > 1e-12;
  }
  const double secs = Seconds(start);
  return {mismatches == 0 && secs < 30.0,
          Fmt("100 instances, %d mismatches, max |diff| %.3g <= 1e-12; %.2fs",
              mismatches, worst, secs)};
}

Outcome ExtremePointBound() {
  const auto start = Clock::now();
  int violations = 0;
  double tightest = 0.0;
  for (uint64_t t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(t % 4);
    std::unique_ptr<DecomposableFunction> f;
    if (t % 2 == 0) {
      f = std::make_unique<DecomposableFunction>(
          ToFunction(std::make_shared<const CoverageInstance>(
              GenCoverage(Substream(41, t), n, 8 + static_cast<int>(t % 13),
                          std::max(0.4, 1.0 / n)))));
    } else {
      f = std::make_unique<DecomposableFunction>(
          ToFunction(std::make_shared<const FacilityLocationInstance>(
              GenFacility(Substream(43, t), n, 5 + static_cast<int>(t % 16),
                          CostLaw::kUniform))));
    }
    const double sum_p = PiExact(*f).sum_p;
    const double bound = static_cast<double>(n) * MaxExtremeCount(*f);
    violations += !(sum_p <= bound);
    tightest = std::max(tightest, sum_p / bound);
  }
  const double secs = Seconds(start);
  return {violations == 0 && secs < 30.0,
          Fmt("20 instances, %d violations, max sum_p/(n*B) %.3f; %.2fs",
              violations, tightest, secs)};
}

Outcome MatroidSparsifier() {
  const auto start = Clock::now();
  const DecomposableFunction f = ToFunction(
      std::make_shared<const CoverageInstance>(GenCoverage(77, 12, 300, 0.8)));
  const UniformMatroid m(12, 3);
  SparsifyConfig config;
  config.epsilon = kEps;
  config.delta = kDelta;
  config.seed = 5000;
  config.matroid = &m;
  const int trials = 200;
  const TrialStats stats = RunTrials(f, PiExactMatroid(f, m), config, trials);
  const double rate = static_cast<double>(stats.successes) / trials;
  const double floor = PassRateFloor(kDelta, trials);
  const double km = KappaMatroid(12, 3, kEps, kDelta);
  const double ku = KappaUnconstrained(12, kEps, kDelta);
  const double secs = Seconds(start);
  return {rate >= floor && km < ku,
          Fmt("pass rate %.3f >= %.4f [%s]; mean size %.1f of %d; "
              "kappa_matroid %.2f < kappa_unconstrained %.2f [%s]; %.2fs",
              rate, floor, rate >= floor ? "ok" : "not met", stats.mean_size,
              f.num_components(), km, ku, km < ku ? "ok" : "not met", secs)};
}

Outcome GreedyTransfer() {
  const auto start = Clock::now();
  const double factor = (1.0 - std::exp(-1.0)) * (1.0 - kEps) / (1.0 + kEps);
  int checked = 0;
  int violations = 0;
  int sparse_trials = 0;
  double worst = INFINITY;
  for (uint64_t t = 0; t < 50; ++t) {
    const int n = 6 + static_cast<int>(t % 7);
    const int k = 1 + static_cast<int>(t % 4);
    const Instance inst =
        t % 2 == 0
            ? Instance(GenCoverage(Substream(53, t), n, 300, 0.8))
            : Instance(GenFacility(Substream(59, t), n, 300, CostLaw::kUniform));
    const DecomposableFunction& f = inst.function();
    const SetFunction full = [&f](const Subset& s) { return f.Eval(s); };
    const double opt = BruteOpt(full, n, k).value;
    const ImportanceEstimates est = EstimateImportance(inst, PiRequest::kClosed);
    for (uint64_t trial = 0; trial < 4; ++trial) {
      SparsifyConfig config;
      config.epsilon = kEps;
      config.delta = kDelta;
      config.seed = Substream(61, t * 4 + trial);
      const SparsifierWeights w = SparsifyWith(f, est, config);
      sparse_trials += w.size() < f.num_components();
      if (!VerifyAllSubsets(f, w, kEps).pass) continue;
      const SetFunction sparse = [&f, &w](const Subset& s) {
        return f.EvalWeighted(w, s);
      };
      const GreedyTrace g = GreedyCardinality(sparse, n, k);
      const double value = f.Eval(g.ChosenSet(n));
      ++checked;
      violations += value < factor * opt;
      worst = std::min(worst, value / opt);
    }
  }
  const double secs = Seconds(start);
  return {violations == 0 && checked > 0,
          Fmt("%d passing sparsifiers (%d/200 nontrivial), %d violations; "
              "worst F(A)/OPT %.4f >= %.4f; %.2fs",
              checked, sparse_trials, violations, worst, factor, secs)};
}

Outcome LovaszTransfer() {
  const auto start = Clock::now();
  const DecomposableFunction& f = BaseFunction();
  const ImportanceEstimates est = PiExact(f);
  SparsifyConfig config = BaseConfig();
  int passing = 0;
  int lovasz_failures = 0;
  for (int t = 0; t < 200; ++t) {
    SparsifyConfig trial = config;
    trial.seed = config.seed + static_cast<uint64_t>(t);
    const SparsifierWeights w = SparsifyWith(f, est, trial);
    if (!VerifyAllSubsets(f, w, kEps).pass) continue;
    ++passing;
    lovasz_failures += !VerifyLovasz(f, w, kEps, 100, Substream(67, t)).pass;
  }
  const SetFunction fn = [&f](const Subset& s) { return f.Eval(s); };
  double worst = 0.0;
  std::vector<double> x(static_cast<size_t>(f.n()));
  for (uint64_t mask = 0; mask < (uint64_t{1} << f.n()); ++mask) {
    for (int j = 0; j < f.n(); ++j) x[static_cast<size_t>(j)] = (mask >> j) & 1U;
    worst = std::max(worst, std::abs(LovaszEval(fn, x) -
                                     f.Eval(Subset::FromMask(f.n(), mask))));
  }
  const double secs = Seconds(start);
  return {passing > 0 && lovasz_failures == 0 && worst <= 1e-12,
          Fmt("%d passing sparsifiers, %d continuous failures; corner error "
              "%.3g <= 1e-12; %.2fs",
              passing, lovasz_failures, worst, secs)};
}

Outcome Unbiasedness() {
  const auto start = Clock::now();
  const DecomposableFunction& f = BaseFunction();
  const ImportanceEstimates est = PiExact(f);
  const Subset s = Subset::FromIndices(8, std::vector{1, 4, 6});
  const double truth = f.Eval(s);
  const int seeds = 2000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < seeds; ++t) {
    SparsifyConfig config = BaseConfig();
    config.seed = 90000 + static_cast<uint64_t>(t);
    const double v = f.EvalWeighted(SparsifyWith(f, est, config), s);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / seeds;
  const double var = (sum_sq - seeds * mean * mean) / (seeds - 1);
  const double se = std::sqrt(var / seeds);
  const double secs = Seconds(start);
  return {std::abs(mean - truth) <= 3.0 * se,
          Fmt("mean F'(S) %.3f vs F(S) %.0f, |gap| %.3f <= 3*se %.3f; %.2fs",
              mean, truth, std::abs(mean - truth), 3.0 * se, secs)};
}

Outcome DeskScale() {
  const auto start = Clock::now();
  const Instance inst(GenFacility(1, 36, 50000, CostLaw::kClustered));
  BenchConfig config;
  config.epsilons = {1.0};
  config.trials = 20;
  config.k = 8;
  config.delta = kDelta;
  config.seed = 11;
  config.pi_mode = PiRequest::kClosed;
  const std::vector<BenchRow> rows = RunBench(inst, config);
  std::vector<double> compression;
  std::vector<double> quality;
  for (const BenchRow& r : rows) {
    compression.push_back(50000.0 / r.sparsifier_size);
    quality.push_back(r.relative_quality);
  }
  const double c = Median(compression);
  const double q = Median(quality);
  const double secs = Seconds(start);
  return {c >= 10.0 && q >= 0.90 && secs < 300.0,
          Fmt("median compression %.1fx >= 10, median quality %.4f >= 0.90; "
              "%.2fs",
              c, q, secs)};
}

// FNV-1a over a file's bytes.
uint64_t HashFile(const fs::path& path) {
  const std::string bytes = ReadFile(path.string());
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Drops the trailing two comma-separated fields (wall-clock timings).
void StripRuntimeColumns(const fs::path& path) {
  std::istringstream in(ReadFile(path.string()));
  std::string out;
  std::string line;
  while (std::getline(in, line)) {
    for (int drop = 0; drop < 2; ++drop) line.erase(line.rfind(','));
    out += line + "\n";
  }
  WriteFile(path.string(), out);
}

Outcome Determinism(const std::string& cli) {
  const auto start = Clock::now();
  const fs::path root = fs::temp_directory_path() /
                        ("submod_acceptance_" + std::to_string(::getpid()));
  std::vector<std::string> commands = {
      "gen coverage --sets 8 --universe 200 --density 0.8 --seed 7 -o cov.json",
      "gen facility --facilities 12 --clients 2000 --law clustered --seed 1 "
      "-o fac.json",
      "gen hypergraph --vertices 8 --edges 20 --penalty quadratic --seed 3 "
      "-o hyp.json",
      "sparsify -i cov.json --epsilon 0.5 --delta 0.2 --pi-mode exact "
      "--seed 9 -o cov_w.csv",
      "sparsify -i fac.json --epsilon 2 --allow-no-guarantee --seed 9 "
      "-o fac_w.csv",
      "sparsify -i hyp.json --epsilon 0.5 --seed 9 -o hyp_w.csv",
      "sparsify -i cov.json --uniform-k 3 --seed 9 -o mat_w.csv",
      "maximize -i fac.json -w fac_w.csv --k 4 -o max.json",
      "maximize -i cov.json --k 3 --lazy -o max_full.json",
      "verify -i cov.json -w cov_w.csv --epsilon 0.5 -o verify.json",
      "verify -i cov.json -w mat_w.csv --uniform-k 3 -o verify_m.json",
      "verify -i hyp.json -w hyp_w.csv --lovasz-samples 50 --seed 2 "
      "-o verify_l.json",
      "bench -i fac.json --epsilons 0.5,1,4 --trials 4 --k 4 --seed 5 "
      "-o bench.csv",
  };
  const std::vector<std::string> outputs = {
      "cov.json",        "fac.json",        "hyp.json",      "cov_w.csv",
      "cov_w.csv.json",  "fac_w.csv",       "fac_w.csv.json", "hyp_w.csv",
      "hyp_w.csv.json",  "mat_w.csv",       "mat_w.csv.json", "max.json",
      "max_full.json",   "verify.json",     "verify_m.json", "verify_l.json",
      "bench.csv"};
  std::vector<uint64_t> hashes[2];
  std::string failure;
  for (int run = 0; run < 2 && failure.empty(); ++run) {
    const fs::path dir = root / std::to_string(run);
    fs::create_directories(dir);
    for (const std::string& c : commands) {
      const std::string line =
          "cd '" + dir.string() + "' && '" + cli + "' " + c + " 2>/dev/null";
      const int status = std::system(line.c_str());
      // verify may legitimately exit 1 (sandwich violated).
      const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      if (code != 0 && !(code == 1 && c.rfind("verify", 0) == 0)) {
        failure = "command failed (" + std::to_string(code) + "): " + c;
        break;
      }
    }
    if (!failure.empty()) break;
    StripRuntimeColumns(dir / "bench.csv");
    for (const std::string& o : outputs) hashes[run].push_back(HashFile(dir / o));
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  if (!failure.empty()) return {false, failure};
  int differing = 0;
  for (size_t i = 0; i < outputs.size(); ++i) {
    differing += hashes[0][i] != hashes[1][i];
  }
  return {differing == 0,
          Fmt("%zu commands, %zu output files, %d differ; %.2fs",
              commands.size(), outputs.size(), differing, Seconds(start))};
}

}  // namespace
}  // namespace submod

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <path-to-submod-cli>\n", argv[0]);
    return 64;
  }
  const std::string cli = std::filesystem::absolute(argv[1]).string();
  struct Criterion {
    const char* name;
    std::function<submod::Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 sandwich probability", submod::SandwichProbability},
      {"2 size expectation", submod::SizeExpectation},
      {"3 closed-form importance", submod::ClosedFormCorrectness},
      {"4 extreme-point bound", submod::ExtremePointBound},
      {"5 matroid sparsifier", submod::MatroidSparsifier},
      {"6 greedy guarantee transfer", submod::GreedyTransfer},
      {"7 Lovasz transfer", submod::LovaszTransfer},
      {"8 unbiasedness", submod::Unbiasedness},
      {"9 desk-scale facility bench", submod::DeskScale},
      {"10 determinism", [&cli] { return submod::Determinism(cli); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    submod::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("%s %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
