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

#include "submod/submod.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "submod/core_model.hpp"
#include "submod/error.hpp"
#include "submod/experiment.hpp"
#include "submod/families.hpp"
#include "submod/importance.hpp"
#include "submod/io.hpp"
#include "submod/lovasz.hpp"
#include "submod/matroid.hpp"
#include "submod/sparsify.hpp"
#include "submod/verify.hpp"

struct submod_instance {
  submod::Instance inst;
};

struct submod_weights {
  submod::SparsifierWeights w;
};

struct submod_matroid {
  std::unique_ptr<submod::Matroid> m;
};

namespace {

thread_local std::string last_error;

submod_status ToStatus(submod::ErrorCode code) {
  switch (code) {
    case submod::ErrorCode::kInvalidArgument:
      return SUBMOD_INVALID_ARGUMENT;
    case submod::ErrorCode::kOutOfRange:
      return SUBMOD_OUT_OF_RANGE;
    case submod::ErrorCode::kBudgetExceeded:
      return SUBMOD_BUDGET_EXCEEDED;
    case submod::ErrorCode::kIncompatible:
      return SUBMOD_INCOMPATIBLE;
    case submod::ErrorCode::kIo:
      return SUBMOD_IO_ERROR;
    case submod::ErrorCode::kParse:
      return SUBMOD_PARSE_ERROR;
  }
  return SUBMOD_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
submod_status Guard(Body&& body) {
  try {
    body();
    return SUBMOD_OK;
  } catch (const submod::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SUBMOD_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SUBMOD_INTERNAL;
  }
}

void NotNull(const void* p, const char* what) {
  submod::Require(p != nullptr, submod::ErrorCode::kInvalidArgument,
                  std::string(what) + " must not be null");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

submod::Subset MakeSubset(const submod_instance* inst, const int* subset,
                          size_t len) {
  if (len > 0) NotNull(subset, "subset");
  return submod::Subset::FromIndices(
      inst->inst.function().n(),
      std::span<const int>(subset, len));
}

submod::PiRequest Mode(const char* pi_mode) {
  return pi_mode == nullptr ? submod::PiRequest::kAuto
                            : submod::ParsePiRequest(pi_mode);
}

void Emit(submod_instance** out, submod::Instance inst) {
  *out = new submod_instance{std::move(inst)};
}

}  // namespace

extern "C" {

const char* submod_version(void) { return "1.0.0"; }

const char* submod_status_name(submod_status status) {
  switch (status) {
    case SUBMOD_OK:
      return "ok";
    case SUBMOD_INVALID_ARGUMENT:
      return "invalid argument";
    case SUBMOD_OUT_OF_RANGE:
      return "out of range";
    case SUBMOD_BUDGET_EXCEEDED:
      return "budget exceeded";
    case SUBMOD_INCOMPATIBLE:
      return "incompatible";
    case SUBMOD_IO_ERROR:
      return "i/o error";
    case SUBMOD_PARSE_ERROR:
      return "parse error";
    case SUBMOD_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* submod_last_error(void) { return last_error.c_str(); }

void submod_string_free(char* s) { std::free(s); }

submod_status submod_instance_load(const char* path, submod_instance** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    Emit(out, submod::ParseInstanceJson(submod::ReadFile(path)));
  });
}

submod_status submod_instance_parse(const char* json_text,
                                    submod_instance** out) {
  return Guard([&] {
    NotNull(json_text, "json_text");
    NotNull(out, "out");
    Emit(out, submod::ParseInstanceJson(json_text));
  });
}

submod_status submod_instance_save(const submod_instance* inst,
                                   const char* path) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(path, "path");
    submod::WriteFile(path, submod::InstanceToJson(inst->inst));
  });
}

submod_status submod_instance_to_json(const submod_instance* inst, char** out) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(out, "out");
    *out = CopyString(submod::InstanceToJson(inst->inst));
  });
}

void submod_instance_free(submod_instance* inst) { delete inst; }

const char* submod_instance_type(const submod_instance* inst) {
  if (inst == nullptr) return "";
  if (inst->inst.coverage()) return "coverage";
  if (inst->inst.facility()) return "facility";
  if (std::holds_alternative<submod::HypergraphCutInstance>(inst->inst.data())) {
    return "hypergraph";
  }
  return "table";
}

int submod_instance_ground_size(const submod_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.function().n();
}

int submod_instance_num_components(const submod_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.function().num_components();
}

int submod_instance_dropped(const submod_instance* inst) {
  if (inst == nullptr) return 0;
  const auto* c = inst->inst.coverage();
  return c == nullptr ? 0 : c->dropped_uncovered;
}

submod_status submod_gen_coverage(uint64_t seed, int n_sets, int universe_size,
                                  double density, submod_instance** out) {
  return Guard([&] {
    NotNull(out, "out");
    Emit(out, submod::Instance(
                  submod::GenCoverage(seed, n_sets, universe_size, density)));
  });
}

submod_status submod_gen_facility(uint64_t seed, int n_facilities,
                                  int n_clients, const char* law,
                                  submod_instance** out) {
  return Guard([&] {
    NotNull(law, "law");
    NotNull(out, "out");
    Emit(out, submod::Instance(submod::GenFacility(
                  seed, n_facilities, n_clients, submod::ParseCostLaw(law))));
  });
}

submod_status submod_gen_hypergraph(uint64_t seed, int n_vertices, int n_edges,
                                    int max_edge_size, const char* penalty,
                                    submod_instance** out) {
  return Guard([&] {
    NotNull(penalty, "penalty");
    NotNull(out, "out");
    Emit(out, submod::Instance(submod::GenHypergraph(
                  seed, n_vertices, n_edges, max_edge_size,
                  submod::ParsePenalty(penalty))));
  });
}

submod_status submod_import_pickups(const char* pickups_path,
                                    const char* locations_path,
                                    submod_instance** out) {
  return Guard([&] {
    NotNull(pickups_path, "pickups_path");
    NotNull(locations_path, "locations_path");
    NotNull(out, "out");
    Emit(out, submod::Instance(submod::LoadPickupCsv(
                  submod::ReadFile(pickups_path),
                  submod::ReadFile(locations_path))));
  });
}

submod_status submod_import_bipartite(const char* edges_path,
                                      submod_instance** out) {
  return Guard([&] {
    NotNull(edges_path, "edges_path");
    NotNull(out, "out");
    Emit(out, submod::Instance(
                  submod::LoadBipartiteCsv(submod::ReadFile(edges_path))));
  });
}

submod_status submod_eval(const submod_instance* inst,
                          const submod_weights* weights, const int* subset,
                          size_t len, double* out) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(out, "out");
    const submod::Subset s = MakeSubset(inst, subset, len);
    const auto& f = inst->inst.function();
    *out = weights == nullptr ? f.Eval(s) : f.EvalWeighted(weights->w, s);
  });
}

submod_status submod_eval_component(const submod_instance* inst, int component,
                                    const int* subset, size_t len,
                                    double* out) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(out, "out");
    *out = inst->inst.function().EvalComponent(component,
                                                MakeSubset(inst, subset, len));
  });
}

submod_status submod_lovasz_eval(const submod_instance* inst,
                                 const submod_weights* weights,
                                 const double* x, size_t len, double* out) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(x, "x");
    NotNull(out, "out");
    const auto& f = inst->inst.function();
    submod::Require(len == static_cast<size_t>(f.n()),
                    submod::ErrorCode::kInvalidArgument,
                    "x must have one coordinate per ground element");
    if (weights == nullptr) {
      *out = submod::LovaszEval([&](const submod::Subset& s) { return f.Eval(s); },
                                std::span<const double>(x, len));
    } else {
      *out = submod::LovaszEval(
          [&](const submod::Subset& s) { return f.EvalWeighted(weights->w, s); },
          std::span<const double>(x, len));
    }
  });
}

submod_status submod_matroid_uniform(int n, int k, submod_matroid** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new submod_matroid{std::make_unique<submod::UniformMatroid>(n, k)};
  });
}

submod_status submod_matroid_partition(const char* json_text, int n,
                                       submod_matroid** out) {
  return Guard([&] {
    NotNull(json_text, "json_text");
    NotNull(out, "out");
    *out = new submod_matroid{submod::ParsePartitionMatroidJson(json_text, n)};
  });
}

submod_status submod_matroid_load_partition(const char* path, int n,
                                            submod_matroid** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new submod_matroid{
        submod::ParsePartitionMatroidJson(submod::ReadFile(path), n)};
  });
}

int submod_matroid_rank(const submod_matroid* m) {
  return m == nullptr ? 0 : m->m->rank();
}

submod_status submod_matroid_is_independent(const submod_matroid* m,
                                            const int* subset, size_t len,
                                            int* out) {
  return Guard([&] {
    NotNull(m, "matroid");
    NotNull(out, "out");
    if (len > 0) NotNull(subset, "subset");
    *out = m->m->IsIndependent(submod::Subset::FromIndices(
               m->m->ground_size(), std::span<const int>(subset, len)))
               ? 1
               : 0;
  });
}

void submod_matroid_free(submod_matroid* m) { delete m; }

submod_status submod_importance(const submod_instance* inst,
                                const char* pi_mode,
                                const submod_matroid* matroid, double* out,
                                size_t len, double* sum_p) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(out, "out");
    submod::Require(
        len == static_cast<size_t>(inst->inst.function().num_components()),
        submod::ErrorCode::kInvalidArgument,
        "output length must equal the component count");
    const submod::ImportanceEstimates est = submod::EstimateImportance(
        inst->inst, Mode(pi_mode), matroid ? matroid->m.get() : nullptr);
    std::copy(est.p_hat.begin(), est.p_hat.end(), out);
    if (sum_p != nullptr) *sum_p = est.sum_p;
  });
}

submod_status submod_kappa(int n, int rank, double epsilon, double delta,
                           double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = rank == 0 ? submod::KappaUnconstrained(n, epsilon, delta)
                     : submod::KappaMatroid(n, rank, epsilon, delta);
  });
}

void submod_sparsify_options_init(submod_sparsify_options* opts) {
  if (opts == nullptr) return;
  opts->epsilon = 0.5;
  opts->delta = 0.1;
  opts->seed = 0;
  opts->pi_mode = nullptr;
  opts->allow_no_guarantee = 0;
}

submod_status submod_sparsify(const submod_instance* inst,
                              const submod_sparsify_options* opts,
                              const submod_matroid* matroid,
                              submod_weights** out) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(opts, "options");
    NotNull(out, "out");
    submod::SparsifyConfig config;
    config.epsilon = opts->epsilon;
    config.delta = opts->delta;
    config.seed = opts->seed;
    config.pi_mode = Mode(opts->pi_mode);
    config.allow_no_guarantee = opts->allow_no_guarantee != 0;
    config.matroid = matroid ? matroid->m.get() : nullptr;
    *out = new submod_weights{submod::Sparsify(inst->inst, config)};
  });
}

submod_status submod_weights_from_array(const double* values, size_t len,
                                        submod_weights** out) {
  return Guard([&] {
    NotNull(out, "out");
    if (len > 0) NotNull(values, "values");
    *out = new submod_weights{
        submod::SparsifierWeights(std::vector<double>(values, values + len))};
  });
}

submod_status submod_weights_parse_csv(const char* csv_text,
                                       int num_components,
                                       submod_weights** out) {
  return Guard([&] {
    NotNull(csv_text, "csv_text");
    NotNull(out, "out");
    *out = new submod_weights{submod::ParseWeightsCsv(csv_text, num_components)};
  });
}

submod_status submod_weights_load(const char* path,
                                  const submod_instance* inst,
                                  submod_weights** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(inst, "instance");
    NotNull(out, "out");
    *out = new submod_weights{submod::ParseWeightsCsv(
        submod::ReadFile(path), inst->inst.function().num_components())};
  });
}

submod_status submod_weights_to_csv(const submod_weights* w, char** out) {
  return Guard([&] {
    NotNull(w, "weights");
    NotNull(out, "out");
    *out = CopyString(submod::WeightsToCsv(w->w));
  });
}

submod_status submod_weights_sidecar(const submod_weights* w, char** out) {
  return Guard([&] {
    NotNull(w, "weights");
    NotNull(out, "out");
    *out = CopyString(submod::SidecarJson(w->w));
  });
}

int submod_weights_size(const submod_weights* w) {
  return w == nullptr ? 0 : w->w.size();
}

int submod_weights_length(const submod_weights* w) {
  return w == nullptr ? 0 : w->w.length();
}

submod_status submod_weights_get(const submod_weights* w, double* out,
                                 size_t len) {
  return Guard([&] {
    NotNull(w, "weights");
    NotNull(out, "out");
    submod::Require(len == static_cast<size_t>(w->w.length()),
                    submod::ErrorCode::kInvalidArgument,
                    "output length must equal the weight count");
    std::copy(w->w.values().begin(), w->w.values().end(), out);
  });
}

void submod_weights_free(submod_weights* w) { delete w; }

submod_status submod_maximize(const submod_instance* inst,
                              const submod_weights* weights, int k, int lazy,
                              char** report_json) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(report_json, "report_json");
    const auto report = submod::RunMaximize(
        inst->inst.function(), weights ? &weights->w : nullptr, k, lazy != 0);
    *report_json = CopyString(submod::MaximizeReportToJson(report));
  });
}

submod_status submod_verify(const submod_instance* inst,
                            const submod_weights* weights, double epsilon,
                            const submod_matroid* matroid, int* pass,
                            char** report_json) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(weights, "weights");
    NotNull(pass, "pass");
    const auto& f = inst->inst.function();
    const submod::VerificationReport report =
        matroid != nullptr
            ? submod::VerifyMatroid(f, weights->w, epsilon, *matroid->m)
            : submod::VerifyAllSubsets(f, weights->w, epsilon);
    *pass = report.pass ? 1 : 0;
    if (report_json != nullptr) {
      *report_json = CopyString(submod::ReportToJson(report));
    }
  });
}

submod_status submod_verify_lovasz(const submod_instance* inst,
                                   const submod_weights* weights,
                                   double epsilon, int samples, uint64_t seed,
                                   int* pass, char** report_json) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(weights, "weights");
    NotNull(pass, "pass");
    const submod::VerificationReport report = submod::VerifyLovasz(
        inst->inst.function(), weights->w, epsilon, samples, seed);
    *pass = report.pass ? 1 : 0;
    if (report_json != nullptr) {
      *report_json = CopyString(submod::ReportToJson(report));
    }
  });
}

submod_status submod_bench(const submod_instance* inst,
                           const submod_bench_options* opts, char** csv) {
  return Guard([&] {
    NotNull(inst, "instance");
    NotNull(opts, "options");
    NotNull(csv, "csv");
    if (opts->n_epsilons > 0) NotNull(opts->epsilons, "epsilons");
    submod::BenchConfig config;
    config.epsilons.assign(opts->epsilons, opts->epsilons + opts->n_epsilons);
    config.trials = opts->trials;
    config.k = opts->k;
    config.delta = opts->delta;
    config.seed = opts->seed;
    config.pi_mode = Mode(opts->pi_mode);
    config.lazy = opts->lazy != 0;
    *csv = CopyString(submod::BenchToCsv(submod::RunBench(inst->inst, config)));
  });
}

}  // extern "C"
