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

// Command-line front end over the libsubmod C interface.
//
// Exit codes: 0 success or verification pass, 1 verification failure or
// I/O error, 2 enumeration budget exceeded, 64 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submod/submod.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

// Thrown to unwind with a specific exit code after printing the message.
struct ExitError {
  int code;
};

int ExitCodeFor(submod_status status) {
  switch (status) {
    case SUBMOD_OK:
      return kExitPass;
    case SUBMOD_BUDGET_EXCEEDED:
      return kExitBudget;
    case SUBMOD_INVALID_ARGUMENT:
    case SUBMOD_OUT_OF_RANGE:
    case SUBMOD_INCOMPATIBLE:
    case SUBMOD_PARSE_ERROR:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

void Check(submod_status status, const std::string& context) {
  if (status == SUBMOD_OK) return;
  std::cerr << "submod: " << context << ": " << submod_status_name(status)
            << ": " << submod_last_error() << "\n";
  throw ExitError{ExitCodeFor(status)};
}

struct InstanceDeleter {
  void operator()(submod_instance* p) const { submod_instance_free(p); }
};
struct WeightsDeleter {
  void operator()(submod_weights* p) const { submod_weights_free(p); }
};
struct MatroidDeleter {
  void operator()(submod_matroid* p) const { submod_matroid_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { submod_string_free(p); }
};
using InstancePtr = std::unique_ptr<submod_instance, InstanceDeleter>;
using WeightsPtr = std::unique_ptr<submod_weights, WeightsDeleter>;
using MatroidPtr = std::unique_ptr<submod_matroid, MatroidDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void Emit(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "submod: cannot write '" << path << "'\n";
    throw ExitError{kExitFail};
  }
  out << text;
}

void SaveInstance(const InstancePtr& inst, const std::string& out) {
  char* json = nullptr;
  Check(submod_instance_to_json(inst.get(), &json), "serialize instance");
  StringPtr owned(json);
  Emit(out, owned.get());
  const int dropped = submod_instance_dropped(inst.get());
  if (dropped > 0) {
    std::cerr << "submod: dropped " << dropped
              << " uncovered universe elements\n";
  }
}

InstancePtr LoadInstance(const std::string& path) {
  submod_instance* inst = nullptr;
  Check(submod_instance_load(path.c_str(), &inst), "load '" + path + "'");
  return InstancePtr(inst);
}

struct MatroidFlags {
  int uniform_k = 0;
  std::string partition;

  void Add(CLI::App* app) {
    auto* k = app->add_option("--uniform-k", uniform_k,
                              "Constrain to the uniform matroid |S| <= k");
    auto* p = app->add_option("--partition", partition,
                              "Partition matroid JSON "
                              "{\"blocks\":[[..]],\"capacities\":[..]}");
    k->excludes(p);
  }

  MatroidPtr Build(const InstancePtr& inst) const {
    const int n = submod_instance_ground_size(inst.get());
    submod_matroid* m = nullptr;
    if (uniform_k > 0) {
      Check(submod_matroid_uniform(n, uniform_k, &m), "uniform matroid");
    } else if (!partition.empty()) {
      Check(submod_matroid_load_partition(partition.c_str(), n, &m),
            "partition matroid '" + partition + "'");
    }
    return MatroidPtr(m);
  }
};

struct GenArgs {
  uint64_t seed = 0;
  std::string out = "-";
  int sets = 8;
  int universe = 200;
  double density = 0.3;
  int facilities = 36;
  int clients = 1000;
  std::string law = "clustered";
  int vertices = 8;
  int edges = 20;
  int max_edge = 3;
  std::string penalty = "linear";
};

struct ImportArgs {
  std::string pickups;
  std::string locations;
  std::string edges;
  std::string out = "-";
};

struct SparsifyArgs {
  std::string input;
  double epsilon = 0.5;
  double delta = 0.1;
  std::string pi_mode = "auto";
  uint64_t seed = 0;
  bool allow_no_guarantee = false;
  std::string out = "-";
  std::string sidecar;
  MatroidFlags matroid;
};

struct MaximizeArgs {
  std::string input;
  std::string weights;
  int k = 1;
  bool lazy = false;
  std::string out = "-";
};

struct VerifyArgs {
  std::string input;
  std::string weights;
  double epsilon = 0.5;
  int lovasz_samples = 0;
  uint64_t seed = 0;
  std::string out = "-";
  MatroidFlags matroid;
};

struct BenchArgs {
  std::string input;
  std::vector<double> epsilons = {0.25, 0.5, 1.0, 2.0, 4.0};
  int trials = 20;
  int k = 8;
  double delta = 0.2;
  uint64_t seed = 0;
  std::string pi_mode = "auto";
  bool lazy = false;
  std::string out = "-";
};

int RunSparsify(const SparsifyArgs& a) {
  InstancePtr inst = LoadInstance(a.input);
  MatroidPtr matroid = a.matroid.Build(inst);
  submod_sparsify_options opts;
  submod_sparsify_options_init(&opts);
  opts.epsilon = a.epsilon;
  opts.delta = a.delta;
  opts.seed = a.seed;
  opts.pi_mode = a.pi_mode.c_str();
  opts.allow_no_guarantee = a.allow_no_guarantee ? 1 : 0;
  submod_weights* raw = nullptr;
  Check(submod_sparsify(inst.get(), &opts, matroid.get(), &raw), "sparsify");
  WeightsPtr weights(raw);

  char* csv = nullptr;
  Check(submod_weights_to_csv(weights.get(), &csv), "weights csv");
  StringPtr csv_owned(csv);
  Emit(a.out, csv_owned.get());

  char* sidecar = nullptr;
  Check(submod_weights_sidecar(weights.get(), &sidecar), "sidecar");
  StringPtr sidecar_owned(sidecar);
  std::string sidecar_path = a.sidecar;
  if (sidecar_path.empty() && a.out != "-") sidecar_path = a.out + ".json";
  if (sidecar_path.empty()) {
    Emit("-", sidecar_owned.get());
  } else {
    Emit(sidecar_path, sidecar_owned.get());
  }
  return kExitPass;
}

int RunMaximize(const MaximizeArgs& a) {
  InstancePtr inst = LoadInstance(a.input);
  WeightsPtr weights;
  if (!a.weights.empty()) {
    submod_weights* raw = nullptr;
    Check(submod_weights_load(a.weights.c_str(), inst.get(), &raw),
          "load weights '" + a.weights + "'");
    weights.reset(raw);
  }
  char* report = nullptr;
  Check(submod_maximize(inst.get(), weights.get(), a.k, a.lazy ? 1 : 0, &report),
        "maximize");
  StringPtr owned(report);
  Emit(a.out, owned.get());
  return kExitPass;
}

int RunVerify(const VerifyArgs& a) {
  InstancePtr inst = LoadInstance(a.input);
  MatroidPtr matroid = a.matroid.Build(inst);
  submod_weights* raw = nullptr;
  Check(submod_weights_load(a.weights.c_str(), inst.get(), &raw),
        "load weights '" + a.weights + "'");
  WeightsPtr weights(raw);
  int pass = 0;
  char* report = nullptr;
  if (a.lovasz_samples > 0) {
    Check(submod_verify_lovasz(inst.get(), weights.get(), a.epsilon,
                               a.lovasz_samples, a.seed, &pass, &report),
          "verify");
  } else {
    Check(submod_verify(inst.get(), weights.get(), a.epsilon, matroid.get(),
                        &pass, &report),
          "verify");
  }
  StringPtr owned(report);
  Emit(a.out, owned.get());
  return pass ? kExitPass : kExitFail;
}

int RunBench(const BenchArgs& a) {
  InstancePtr inst = LoadInstance(a.input);
  submod_bench_options opts{};
  opts.epsilons = a.epsilons.data();
  opts.n_epsilons = a.epsilons.size();
  opts.trials = a.trials;
  opts.k = a.k;
  opts.delta = a.delta;
  opts.seed = a.seed;
  opts.pi_mode = a.pi_mode.c_str();
  opts.lazy = a.lazy ? 1 : 0;
  char* csv = nullptr;
  Check(submod_bench(inst.get(), &opts, &csv), "bench");
  StringPtr owned(csv);
  Emit(a.out, owned.get());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "submod: sparsify decomposable submodular functions and maximize them "
      "greedily.\nSUBMOD_THREADS caps worker threads."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(submod_version()));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic instance");
  gen_cmd->require_subcommand(1);
  auto* gen_cov = gen_cmd->add_subcommand("coverage", "Maximum coverage");
  gen_cov->add_option("--sets", gen.sets, "Number of sets (ground elements)")
      ->check(CLI::PositiveNumber);
  gen_cov->add_option("--universe", gen.universe, "Universe size (components)")
      ->check(CLI::PositiveNumber);
  gen_cov->add_option("--density", gen.density,
                      "Probability a set contains a universe element");
  auto* gen_fac = gen_cmd->add_subcommand(
      "facility",
      "Facility location. 'uniform' draws costs in [0,1); 'clustered' draws "
      "clients and facilities around 6 hidden centers (Gaussian spread 0.06 "
      "in the unit square), takes Manhattan distances d and sets "
      "cost = max_u d(u,v) - d(u,v)");
  gen_fac->add_option("--facilities", gen.facilities, "Number of facilities")
      ->check(CLI::PositiveNumber);
  gen_fac->add_option("--clients", gen.clients, "Number of clients")
      ->check(CLI::PositiveNumber);
  gen_fac->add_option("--law", gen.law, "Cost law")
      ->check(CLI::IsMember({"uniform", "clustered"}));
  auto* gen_hyp = gen_cmd->add_subcommand("hypergraph", "Hypergraph cut penalties");
  gen_hyp->add_option("--vertices", gen.vertices, "Number of vertices");
  gen_hyp->add_option("--edges", gen.edges, "Number of hyperedges");
  gen_hyp->add_option("--max-edge", gen.max_edge, "Largest hyperedge size");
  gen_hyp->add_option("--penalty", gen.penalty, "cut, linear or quadratic")
      ->check(CLI::IsMember({"cut", "linear", "quadratic"}));
  for (auto* sub : {gen_cov, gen_fac, gen_hyp}) {
    sub->add_option("--seed", gen.seed, "Random seed");
    sub->add_option("--out,-o", gen.out, "Output path ('-' for stdout)");
  }

  ImportArgs imp;
  auto* imp_cmd = app.add_subcommand("import", "Build an instance from CSV data");
  imp_cmd->require_subcommand(1);
  auto* imp_pick = imp_cmd->add_subcommand(
      "pickups", "Facility location from pickup points and candidate locations");
  imp_pick->add_option("--pickups", imp.pickups, "CSV of x,y pickup points")
      ->required();
  imp_pick->add_option("--locations", imp.locations, "CSV of x,y locations")
      ->required();
  auto* imp_bip = imp_cmd->add_subcommand(
      "bipartite", "Maximum coverage from a left,right edge list");
  imp_bip->add_option("--edges", imp.edges, "CSV edge list")->required();
  for (auto* sub : {imp_pick, imp_bip}) {
    sub->add_option("--out,-o", imp.out, "Output path ('-' for stdout)");
  }

  SparsifyArgs sp;
  auto* sp_cmd = app.add_subcommand("sparsify", "Sample a sparsifier");
  sp_cmd->add_option("--input,-i", sp.input, "Instance JSON")->required();
  sp_cmd->add_option("--epsilon", sp.epsilon, "Approximation parameter");
  sp_cmd->add_option("--delta", sp.delta, "Failure probability");
  sp_cmd->add_option("--pi-mode", sp.pi_mode, "Importance estimator")
      ->check(CLI::IsMember({"auto", "exact", "exact-matroid", "closed", "upper"}));
  sp_cmd->add_option("--seed", sp.seed, "Random seed");
  sp_cmd->add_flag("--allow-no-guarantee", sp.allow_no_guarantee,
                   "Permit epsilon > 1");
  sp_cmd->add_option("--out,-o", sp.out, "Weights CSV path ('-' for stdout)");
  sp_cmd->add_option("--sidecar", sp.sidecar,
                     "Sidecar JSON path (default: <out>.json)");
  sp.matroid.Add(sp_cmd);

  MaximizeArgs mx;
  auto* mx_cmd = app.add_subcommand("maximize", "Greedy under |S| <= k");
  mx_cmd->add_option("--input,-i", mx.input, "Instance JSON")->required();
  mx_cmd->add_option("--weights,-w", mx.weights, "Weights CSV (optional)");
  mx_cmd->add_option("--k", mx.k, "Cardinality bound")->required();
  mx_cmd->add_flag("--lazy", mx.lazy, "Use lazy greedy");
  mx_cmd->add_option("--out,-o", mx.out, "Report path ('-' for stdout)");

  VerifyArgs vf;
  auto* vf_cmd = app.add_subcommand(
      "verify", "Check (1-eps)F' <= F <= (1+eps)F' exhaustively");
  vf_cmd->add_option("--input,-i", vf.input, "Instance JSON")->required();
  vf_cmd->add_option("--weights,-w", vf.weights, "Weights CSV")->required();
  vf_cmd->add_option("--epsilon", vf.epsilon, "Approximation parameter");
  vf_cmd->add_option("--lovasz-samples", vf.lovasz_samples,
                     "Check Lovasz extensions at this many random points");
  vf_cmd->add_option("--seed", vf.seed, "Seed for Lovasz sample points");
  vf_cmd->add_option("--out,-o", vf.out, "Report path ('-' for stdout)");
  vf.matroid.Add(vf_cmd);

  BenchArgs bn;
  auto* bn_cmd = app.add_subcommand(
      "bench", "Epsilon sweep of greedy on sparsifiers vs the full function");
  bn_cmd->add_option("--input,-i", bn.input, "Instance JSON")->required();
  bn_cmd->add_option("--epsilons", bn.epsilons, "Comma-separated epsilons")
      ->delimiter(',');
  bn_cmd->add_option("--trials", bn.trials, "Trials per epsilon")
      ->check(CLI::PositiveNumber);
  bn_cmd->add_option("--k", bn.k, "Cardinality bound")->check(CLI::PositiveNumber);
  bn_cmd->add_option("--delta", bn.delta, "Failure probability");
  bn_cmd->add_option("--seed", bn.seed, "Random seed");
  bn_cmd->add_option("--pi-mode", bn.pi_mode, "Importance estimator")
      ->check(CLI::IsMember({"auto", "exact", "closed", "upper"}));
  bn_cmd->add_flag("--lazy", bn.lazy, "Use lazy greedy");
  bn_cmd->add_option("--out,-o", bn.out, "CSV path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      submod_instance* raw = nullptr;
      if (gen_cov->parsed()) {
        Check(submod_gen_coverage(gen.seed, gen.sets, gen.universe, gen.density,
                                  &raw),
              "gen coverage");
      } else if (gen_fac->parsed()) {
        Check(submod_gen_facility(gen.seed, gen.facilities, gen.clients,
                                  gen.law.c_str(), &raw),
              "gen facility");
      } else {
        Check(submod_gen_hypergraph(gen.seed, gen.vertices, gen.edges,
                                    gen.max_edge, gen.penalty.c_str(), &raw),
              "gen hypergraph");
      }
      SaveInstance(InstancePtr(raw), gen.out);
      return kExitPass;
    }
    if (imp_cmd->parsed()) {
      submod_instance* raw = nullptr;
      if (imp_pick->parsed()) {
        Check(submod_import_pickups(imp.pickups.c_str(), imp.locations.c_str(),
                                    &raw),
              "import pickups");
      } else {
        Check(submod_import_bipartite(imp.edges.c_str(), &raw),
              "import bipartite");
      }
      SaveInstance(InstancePtr(raw), imp.out);
      return kExitPass;
    }
    if (sp_cmd->parsed()) return RunSparsify(sp);
    if (mx_cmd->parsed()) return RunMaximize(mx);
    if (vf_cmd->parsed()) return RunVerify(vf);
    if (bn_cmd->parsed()) return RunBench(bn);
  } catch (const ExitError& e) {
    return e.code;
  }
  return kExitUsage;
}
