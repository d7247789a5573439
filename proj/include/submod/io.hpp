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

// Text formats. Everything is JSON or CSV.
//
// Instance file: {"type": "coverage" | "facility" | "hypergraph" | "table",
// ...payload}
//   coverage:   "n_sets", "universe_size", "edges": [[component_id, set], ...]
//   facility:   "n_facilities", "n_clients", "costs": row-major flat array
//   hypergraph: "n_vertices", "hyperedges": [[v, ...], ...],
//               "penalties": ["cut" | "linear" | "quadratic", ...]
//   table:      "n", "tables": [[2^n values], ...]; each table must be
//               submodular, monotonicity is detected
//
// Weights CSV: header "component_id,weight", one row per nonzero weight.
// Partition matroid: {"blocks": [[...], ...], "capacities": [...]}.

#ifndef SUBMOD_IO_HPP_
#define SUBMOD_IO_HPP_

#include <memory>
#include <string>

#include "submod/core_model.hpp"
#include "submod/families.hpp"
#include "submod/importance.hpp"
#include "submod/matroid.hpp"
#include "submod/verify.hpp"

namespace submod {

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

Instance ParseInstanceJson(const std::string& text);
std::string InstanceToJson(const Instance& inst);

// Zero weights omitted; doubles printed with 17 significant digits.
std::string WeightsToCsv(const SparsifierWeights& w);
SparsifierWeights ParseWeightsCsv(const std::string& text, int num_components);

// epsilon, delta, kappa, sum_p, size, mode, seed, guarantee.
std::string SidecarJson(const SparsifierWeights& w);

std::string ReportToJson(const VerificationReport& report);

std::unique_ptr<PartitionMatroid> ParsePartitionMatroidJson(
    const std::string& text, int n);

// Pickup points "x,y" per line (optional header) and candidate locations in
// the same format; Manhattan distances feed UberTransform.
FacilityLocationInstance LoadPickupCsv(const std::string& points_text,
                                       const std::string& locations_text);

// Bipartite edges "left,right" per line after one header line. Left vertices
// are the ground set, right vertices the covered universe; ids are
// arbitrary strings, numbered in order of first appearance.
CoverageInstance LoadBipartiteCsv(const std::string& text);

}  // namespace submod

#endif  // SUBMOD_IO_HPP_
