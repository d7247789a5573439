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

// Concrete families: maximum coverage, facility location, hypergraph cut
// penalties and explicit tables, plus seeded generators for each.

#ifndef SUBMOD_FAMILIES_HPP_
#define SUBMOD_FAMILIES_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "submod/core_model.hpp"

namespace submod {

// Ground elements are the sets S_a; component i is the indicator that
// universe element i is covered.
struct CoverageInstance {
  int n_sets = 0;
  // covers[i] = sorted set indices a with i in S_a. Never empty.
  std::vector<std::vector<int>> covers;
  // Universe elements dropped at construction because no set covers them.
  int dropped_uncovered = 0;

  int universe_size() const { return static_cast<int>(covers.size()); }

  // `edges` holds (universe element, set index) pairs. Uncovered universe
  // elements are dropped and the survivors renumbered in order.
  static CoverageInstance FromEdges(
      int n_sets, int universe_size,
      std::span<const std::pair<int, int>> edges);
  static CoverageInstance FromSets(int universe_size,
                                   const std::vector<std::vector<int>>& sets);

  // |S_a| for every set.
  std::vector<int> SetSizes() const;
};

struct FacilityLocationInstance {
  int n_facilities = 0;
  int n_clients = 0;
  // Row-major n_clients x n_facilities, all entries >= 0.
  std::vector<double> cost;

  static FacilityLocationInstance FromRows(
      const std::vector<std::vector<double>>& rows);

  double Cost(int client, int facility) const {
    return cost[static_cast<size_t>(client) * n_facilities + facility];
  }
  std::span<const double> Row(int client) const {
    return {cost.data() + static_cast<size_t>(client) * n_facilities,
            static_cast<size_t>(n_facilities)};
  }
  // A client whose row is all zero contributes the zero function.
  bool IsInert(int client) const;
  int InertCount() const;
};

enum class Penalty { kCutIndicator, kLinear, kQuadratic };

std::string PenaltyName(Penalty p);
Penalty ParsePenalty(const std::string& name);

struct HypergraphCutInstance {
  int n_vertices = 0;
  std::vector<std::vector<int>> hyperedges;  // sorted, nonempty
  std::vector<Penalty> penalties;            // one per hyperedge

  void Validate() const;
};

// Explicit values indexed by bitmask, n <= 10.
struct TableFunction {
  int n = 0;
  std::vector<double> values;  // size 2^n, values[0] == 0

  void Validate() const;
  double At(uint64_t mask) const { return values[mask]; }
};

inline constexpr int kMaxTableSize = 10;

struct TableInstance {
  int n = 0;
  std::vector<TableFunction> tables;
};

// Single-component evaluations.
double CoverageEval(const CoverageInstance& inst, int i, const Subset& a);
double FacilityEval(const FacilityLocationInstance& inst, int i,
                    const Subset& a);
double HypercutEval(const HypergraphCutInstance& inst, int e,
                    const Subset& s);
// Penalty applied to (|S cap e|, |e \ S|).
double ApplyPenalty(Penalty kind, int inside, int outside);

// Component handles sharing one immutable instance.
ComponentPtr MakeCoverageComponent(std::shared_ptr<const CoverageInstance> inst,
                                   int i);
ComponentPtr MakeFacilityComponent(
    std::shared_ptr<const FacilityLocationInstance> inst, int i);
ComponentPtr MakeHypercutComponent(
    std::shared_ptr<const HypergraphCutInstance> inst, int e);
// Rejects invalid tables. `monotone_claim` is the caller's declaration.
ComponentPtr MakeTableComponent(TableFunction table, bool monotone_claim);
// f(S) = |S|.
ComponentPtr MakeModularCount(int n);

DecomposableFunction ToFunction(std::shared_ptr<const CoverageInstance> inst);
DecomposableFunction ToFunction(
    std::shared_ptr<const FacilityLocationInstance> inst);
DecomposableFunction ToFunction(
    std::shared_ptr<const HypergraphCutInstance> inst);
DecomposableFunction ToFunction(const TableInstance& inst);

// Materializes a component as a table (n <= 10).
TableFunction Tabulate(const SubmodularComponent& f);

// cost[v][u] = max_u' d(u', v) - d(u, v). Rows are clients.
FacilityLocationInstance UberTransform(
    const std::vector<std::vector<double>>& distances);

enum class CostLaw { kUniform, kClustered };

std::string CostLawName(CostLaw law);
CostLaw ParseCostLaw(const std::string& name);

// Parameters of the clustered law. Facilities are uniform in the unit
// square; clients are drawn around hidden centers with Gaussian spread;
// distances are Manhattan and pass through UberTransform.
struct ClusteredLaw {
  int centers = 6;
  double spread = 0.06;
};

// Every universe element is included in each set with probability `density`
// and resampled until at least one set covers it.
CoverageInstance GenCoverage(uint64_t seed, int n_sets, int universe_size,
                             double density);
FacilityLocationInstance GenFacility(uint64_t seed, int n_facilities,
                                     int n_clients, CostLaw law,
                                     ClusteredLaw params = {});
// Hyperedge sizes uniform in [2, max_edge_size].
HypergraphCutInstance GenHypergraph(uint64_t seed, int n_vertices,
                                    int n_edges, int max_edge_size,
                                    Penalty kind);

// Tagged union of the loadable families.
class Instance {
 public:
  using Data = std::variant<CoverageInstance, FacilityLocationInstance,
                            HypergraphCutInstance, TableInstance>;

  explicit Instance(Data data);

  const Data& data() const { return *data_; }
  const DecomposableFunction& function() const { return function_; }
  std::string type_name() const;

  const CoverageInstance* coverage() const {
    return std::get_if<CoverageInstance>(data_.get());
  }
  const FacilityLocationInstance* facility() const {
    return std::get_if<FacilityLocationInstance>(data_.get());
  }

 private:
  static DecomposableFunction Build(const std::shared_ptr<const Data>& data);

  std::shared_ptr<const Data> data_;
  DecomposableFunction function_;
};

}  // namespace submod

#endif  // SUBMOD_FAMILIES_HPP_
