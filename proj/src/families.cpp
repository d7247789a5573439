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

#include "submod/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "submod/error.hpp"
#include "submod/random.hpp"

namespace submod {

// ---------------------------------------------------------------------------
// Instances

CoverageInstance CoverageInstance::FromEdges(
    int n_sets, int universe_size, std::span<const std::pair<int, int>> edges) {
  Require(n_sets >= 1, ErrorCode::kInvalidArgument, "need at least one set");
  Require(universe_size >= 0, ErrorCode::kInvalidArgument,
          "negative universe size");
  std::vector<std::vector<int>> covers(static_cast<size_t>(universe_size));
  for (const auto& [element, set] : edges) {
    Require(element >= 0 && element < universe_size, ErrorCode::kOutOfRange,
            "universe element " + std::to_string(element) + " out of range");
    Require(set >= 0 && set < n_sets, ErrorCode::kOutOfRange,
            "set index " + std::to_string(set) + " out of range");
    covers[static_cast<size_t>(element)].push_back(set);
  }
  CoverageInstance inst;
  inst.n_sets = n_sets;
  for (auto& c : covers) {
    if (c.empty()) {
      ++inst.dropped_uncovered;
      continue;
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    inst.covers.push_back(std::move(c));
  }
  Require(!inst.covers.empty(), ErrorCode::kInvalidArgument,
          "coverage instance covers no universe element");
  return inst;
}

CoverageInstance CoverageInstance::FromSets(
    int universe_size, const std::vector<std::vector<int>>& sets) {
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < sets.size(); ++a) {
    for (int element : sets[a]) edges.emplace_back(element, static_cast<int>(a));
  }
  return FromEdges(static_cast<int>(sets.size()), universe_size, edges);
}

std::vector<int> CoverageInstance::SetSizes() const {
  std::vector<int> sizes(static_cast<size_t>(n_sets), 0);
  for (const auto& c : covers) {
    for (int a : c) ++sizes[static_cast<size_t>(a)];
  }
  return sizes;
}

FacilityLocationInstance FacilityLocationInstance::FromRows(
    const std::vector<std::vector<double>>& rows) {
  Require(!rows.empty() && !rows.front().empty(), ErrorCode::kInvalidArgument,
          "empty cost matrix");
  FacilityLocationInstance inst;
  inst.n_clients = static_cast<int>(rows.size());
  inst.n_facilities = static_cast<int>(rows.front().size());
  inst.cost.reserve(rows.size() * rows.front().size());
  for (const auto& row : rows) {
    Require(static_cast<int>(row.size()) == inst.n_facilities,
            ErrorCode::kInvalidArgument, "ragged cost matrix");
    for (double c : row) {
      Require(std::isfinite(c) && c >= 0.0, ErrorCode::kInvalidArgument,
              "costs must be finite and nonnegative");
      inst.cost.push_back(c);
    }
  }
  return inst;
}

bool FacilityLocationInstance::IsInert(int client) const {
  for (double c : Row(client)) {
    if (c > 0.0) return false;
  }
  return true;
}

int FacilityLocationInstance::InertCount() const {
  int count = 0;
  for (int i = 0; i < n_clients; ++i) count += IsInert(i) ? 1 : 0;
  return count;
}

std::string PenaltyName(Penalty p) {
  switch (p) {
    case Penalty::kCutIndicator:
      return "cut";
    case Penalty::kLinear:
      return "linear";
    case Penalty::kQuadratic:
      return "quadratic";
  }
  return "?";
}

Penalty ParsePenalty(const std::string& name) {
  if (name == "cut" || name == "indicator") return Penalty::kCutIndicator;
  if (name == "linear") return Penalty::kLinear;
  if (name == "quadratic") return Penalty::kQuadratic;
  Fail(ErrorCode::kParse, "unknown penalty kind '" + name + "'");
}

void HypergraphCutInstance::Validate() const {
  Require(n_vertices >= 1, ErrorCode::kInvalidArgument, "need a vertex");
  Require(!hyperedges.empty(), ErrorCode::kInvalidArgument, "need a hyperedge");
  Require(hyperedges.size() == penalties.size(), ErrorCode::kInvalidArgument,
          "one penalty per hyperedge");
  for (const auto& e : hyperedges) {
    Require(!e.empty(), ErrorCode::kInvalidArgument, "empty hyperedge");
    Require(std::is_sorted(e.begin(), e.end()) &&
                std::adjacent_find(e.begin(), e.end()) == e.end(),
            ErrorCode::kInvalidArgument, "hyperedge must be sorted and unique");
    Require(e.front() >= 0 && e.back() < n_vertices, ErrorCode::kOutOfRange,
            "hyperedge vertex out of range");
  }
}

void TableFunction::Validate() const {
  Require(n >= 1 && n <= kMaxTableSize, ErrorCode::kInvalidArgument,
          "table functions need 1 <= n <= " + std::to_string(kMaxTableSize));
  Require(values.size() == (size_t{1} << n), ErrorCode::kInvalidArgument,
          "table needs exactly 2^n values");
  Require(values[0] == 0.0, ErrorCode::kInvalidArgument,
          "table value at the empty set must be 0");
  for (double v : values) {
    Require(std::isfinite(v) && v >= 0.0, ErrorCode::kInvalidArgument,
            "table values must be finite and nonnegative");
  }
}

// ---------------------------------------------------------------------------
// Evaluation

double CoverageEval(const CoverageInstance& inst, int i, const Subset& a) {
  Require(i >= 0 && i < inst.universe_size(), ErrorCode::kOutOfRange,
          "universe element out of range");
  for (int set : inst.covers[static_cast<size_t>(i)]) {
    if (a.Contains(set)) return 1.0;
  }
  return 0.0;
}

double FacilityEval(const FacilityLocationInstance& inst, int i,
                    const Subset& a) {
  Require(i >= 0 && i < inst.n_clients, ErrorCode::kOutOfRange,
          "client out of range");
  const double* row = inst.cost.data() + static_cast<size_t>(i) * inst.n_facilities;
  double best = 0.0;
  for (int j : a.members()) best = std::max(best, row[j]);
  return best;
}

double ApplyPenalty(Penalty kind, int inside, int outside) {
  switch (kind) {
    case Penalty::kCutIndicator:
      return (inside > 0 && outside > 0) ? 1.0 : 0.0;
    case Penalty::kLinear:
      return static_cast<double>(std::min(inside, outside));
    case Penalty::kQuadratic:
      return static_cast<double>(inside) * static_cast<double>(outside);
  }
  return 0.0;
}

double HypercutEval(const HypergraphCutInstance& inst, int e, const Subset& s) {
  Require(e >= 0 && e < static_cast<int>(inst.hyperedges.size()),
          ErrorCode::kOutOfRange, "hyperedge index out of range");
  const auto& edge = inst.hyperedges[static_cast<size_t>(e)];
  int inside = 0;
  for (int v : edge) inside += s.Contains(v) ? 1 : 0;
  return ApplyPenalty(inst.penalties[static_cast<size_t>(e)], inside,
                      static_cast<int>(edge.size()) - inside);
}

namespace {

class CoverageComponent : public SubmodularComponent {
 public:
  CoverageComponent(std::shared_ptr<const CoverageInstance> inst, int i)
      : inst_(std::move(inst)), i_(i) {}
  int ground_size() const override { return inst_->n_sets; }
  double Eval(const Subset& s) const override {
    for (int set : inst_->covers[static_cast<size_t>(i_)]) {
      if (s.Contains(set)) return 1.0;
    }
    return 0.0;
  }
  bool monotone_claim() const override { return true; }

 private:
  std::shared_ptr<const CoverageInstance> inst_;
  int i_;
};

class FacilityComponent : public SubmodularComponent {
 public:
  FacilityComponent(std::shared_ptr<const FacilityLocationInstance> inst, int i)
      : inst_(std::move(inst)),
        row_(inst_->cost.data() + static_cast<size_t>(i) * inst_->n_facilities) {}
  int ground_size() const override { return inst_->n_facilities; }
  double Eval(const Subset& s) const override {
    double best = 0.0;
    for (int j : s.members()) best = std::max(best, row_[j]);
    return best;
  }
  bool monotone_claim() const override { return true; }

 private:
  std::shared_ptr<const FacilityLocationInstance> inst_;
  const double* row_;
};

class HypercutComponent : public SubmodularComponent {
 public:
  HypercutComponent(std::shared_ptr<const HypergraphCutInstance> inst, int e)
      : inst_(std::move(inst)), e_(e) {}
  int ground_size() const override { return inst_->n_vertices; }
  double Eval(const Subset& s) const override {
    return HypercutEval(*inst_, e_, s);
  }
  bool monotone_claim() const override { return false; }

 private:
  std::shared_ptr<const HypergraphCutInstance> inst_;
  int e_;
};

class TableComponent : public SubmodularComponent {
 public:
  TableComponent(TableFunction table, bool monotone)
      : table_(std::move(table)), monotone_(monotone) {}
  int ground_size() const override { return table_.n; }
  double Eval(const Subset& s) const override { return table_.At(s.LowMask()); }
  bool monotone_claim() const override { return monotone_; }

 private:
  TableFunction table_;
  bool monotone_;
};

class ModularCount : public SubmodularComponent {
 public:
  explicit ModularCount(int n) : n_(n) {}
  int ground_size() const override { return n_; }
  double Eval(const Subset& s) const override { return s.size(); }
  bool monotone_claim() const override { return true; }

 private:
  int n_;
};

}  // namespace

ComponentPtr MakeCoverageComponent(std::shared_ptr<const CoverageInstance> inst,
                                   int i) {
  Require(i >= 0 && i < inst->universe_size(), ErrorCode::kOutOfRange,
          "universe element out of range");
  return std::make_shared<CoverageComponent>(std::move(inst), i);
}

ComponentPtr MakeFacilityComponent(
    std::shared_ptr<const FacilityLocationInstance> inst, int i) {
  Require(i >= 0 && i < inst->n_clients, ErrorCode::kOutOfRange,
          "client out of range");
  return std::make_shared<FacilityComponent>(std::move(inst), i);
}

ComponentPtr MakeHypercutComponent(
    std::shared_ptr<const HypergraphCutInstance> inst, int e) {
  Require(e >= 0 && e < static_cast<int>(inst->hyperedges.size()),
          ErrorCode::kOutOfRange, "hyperedge index out of range");
  return std::make_shared<HypercutComponent>(std::move(inst), e);
}

ComponentPtr MakeTableComponent(TableFunction table, bool monotone_claim) {
  table.Validate();
  return std::make_shared<TableComponent>(std::move(table), monotone_claim);
}

ComponentPtr MakeModularCount(int n) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "need n >= 1");
  return std::make_shared<ModularCount>(n);
}

DecomposableFunction ToFunction(std::shared_ptr<const CoverageInstance> inst) {
  std::vector<ComponentPtr> components;
  components.reserve(inst->covers.size());
  for (int i = 0; i < inst->universe_size(); ++i) {
    components.push_back(std::make_shared<CoverageComponent>(inst, i));
  }
  return DecomposableFunction(GroundSet(inst->n_sets), std::move(components));
}

DecomposableFunction ToFunction(
    std::shared_ptr<const FacilityLocationInstance> inst) {
  std::vector<ComponentPtr> components;
  components.reserve(static_cast<size_t>(inst->n_clients));
  for (int i = 0; i < inst->n_clients; ++i) {
    components.push_back(std::make_shared<FacilityComponent>(inst, i));
  }
  return DecomposableFunction(GroundSet(inst->n_facilities),
                              std::move(components));
}

DecomposableFunction ToFunction(
    std::shared_ptr<const HypergraphCutInstance> inst) {
  inst->Validate();
  std::vector<ComponentPtr> components;
  for (int e = 0; e < static_cast<int>(inst->hyperedges.size()); ++e) {
    components.push_back(std::make_shared<HypercutComponent>(inst, e));
  }
  return DecomposableFunction(GroundSet(inst->n_vertices),
                              std::move(components));
}

DecomposableFunction ToFunction(const TableInstance& inst) {
  std::vector<ComponentPtr> components;
  for (const auto& t : inst.tables) {
    Require(t.n == inst.n, ErrorCode::kInvalidArgument,
            "table size does not match the instance");
    // Table monotonicity is checked, not assumed.
    auto c = MakeTableComponent(t, false);
    Require(CheckSubmodular(*c).ok, ErrorCode::kInvalidArgument,
            "table function is not submodular");
    const bool monotone = CheckMonotone(*c).ok;
    components.push_back(MakeTableComponent(t, monotone));
  }
  return DecomposableFunction(GroundSet(inst.n), std::move(components));
}

TableFunction Tabulate(const SubmodularComponent& f) {
  TableFunction t;
  t.n = f.ground_size();
  Require(t.n <= kMaxTableSize, ErrorCode::kInvalidArgument,
          "too many elements to tabulate");
  t.values.resize(size_t{1} << t.n);
  for (uint64_t mask = 0; mask < t.values.size(); ++mask) {
    t.values[mask] = f.Eval(Subset::FromMask(t.n, mask));
  }
  return t;
}

FacilityLocationInstance UberTransform(
    const std::vector<std::vector<double>>& distances) {
  Require(!distances.empty() && !distances.front().empty(),
          ErrorCode::kInvalidArgument, "empty distance matrix");
  std::vector<std::vector<double>> rows;
  rows.reserve(distances.size());
  for (const auto& d : distances) {
    Require(d.size() == distances.front().size(), ErrorCode::kInvalidArgument,
            "ragged distance matrix");
    for (double x : d) {
      Require(std::isfinite(x) && x >= 0.0, ErrorCode::kInvalidArgument,
              "distances must be finite and nonnegative");
    }
    const double far = *std::max_element(d.begin(), d.end());
    std::vector<double> row(d.size());
    for (size_t u = 0; u < d.size(); ++u) row[u] = far - d[u];
    rows.push_back(std::move(row));
  }
  return FacilityLocationInstance::FromRows(rows);
}

std::string CostLawName(CostLaw law) {
  return law == CostLaw::kUniform ? "uniform" : "clustered";
}

CostLaw ParseCostLaw(const std::string& name) {
  if (name == "uniform") return CostLaw::kUniform;
  if (name == "clustered") return CostLaw::kClustered;
  Fail(ErrorCode::kParse, "unknown cost law '" + name + "'");
}

// ---------------------------------------------------------------------------
// Generators

CoverageInstance GenCoverage(uint64_t seed, int n_sets, int universe_size,
                             double density) {
  Require(n_sets >= 1 && universe_size >= 1, ErrorCode::kInvalidArgument,
          "need at least one set and one universe element");
  Require(density > 0.0 && density <= 1.0, ErrorCode::kInvalidArgument,
          "density must lie in (0, 1]");
  Require(density * n_sets >= 1.0, ErrorCode::kInvalidArgument,
          "density * n_sets < 1: elements would rarely be covered");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> row;
  for (int i = 0; i < universe_size; ++i) {
    do {
      row.clear();
      for (int a = 0; a < n_sets; ++a) {
        if (rng.Uniform() < density) row.push_back(a);
      }
    } while (row.empty());
    for (int a : row) edges.emplace_back(i, a);
  }
  return CoverageInstance::FromEdges(n_sets, universe_size, edges);
}

FacilityLocationInstance GenFacility(uint64_t seed, int n_facilities,
                                     int n_clients, CostLaw law,
                                     ClusteredLaw params) {
  Require(n_facilities >= 1 && n_clients >= 1, ErrorCode::kInvalidArgument,
          "need at least one facility and one client");
  Rng rng(seed);
  if (law == CostLaw::kUniform) {
    FacilityLocationInstance inst;
    inst.n_facilities = n_facilities;
    inst.n_clients = n_clients;
    inst.cost.resize(static_cast<size_t>(n_facilities) * n_clients);
    for (double& c : inst.cost) c = rng.Uniform();
    return inst;
  }
  Require(params.centers >= 1 && params.spread > 0.0,
          ErrorCode::kInvalidArgument, "bad clustered-law parameters");
  std::vector<std::array<double, 2>> centers(static_cast<size_t>(params.centers));
  for (auto& c : centers) c = {rng.Uniform(), rng.Uniform()};
  // Facilities and clients come from the same mixture, so facilities sit
  // where demand is dense.
  auto draw = [&]() -> std::array<double, 2> {
    const auto& c = centers[rng.Below(centers.size())];
    const double x = c[0] + params.spread * rng.Normal();
    const double y = c[1] + params.spread * rng.Normal();
    return {x, y};
  };
  std::vector<std::array<double, 2>> facilities(static_cast<size_t>(n_facilities));
  for (auto& f : facilities) f = draw();
  FacilityLocationInstance inst;
  inst.n_facilities = n_facilities;
  inst.n_clients = n_clients;
  inst.cost.resize(static_cast<size_t>(n_facilities) * n_clients);
  std::vector<double> d(static_cast<size_t>(n_facilities));
  for (int v = 0; v < n_clients; ++v) {
    const auto p = draw();
    double far = 0.0;
    for (int u = 0; u < n_facilities; ++u) {
      const auto& q = facilities[static_cast<size_t>(u)];
      d[static_cast<size_t>(u)] = std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]);
      far = std::max(far, d[static_cast<size_t>(u)]);
    }
    double* row = inst.cost.data() + static_cast<size_t>(v) * n_facilities;
    for (int u = 0; u < n_facilities; ++u) row[u] = far - d[static_cast<size_t>(u)];
  }
  return inst;
}

HypergraphCutInstance GenHypergraph(uint64_t seed, int n_vertices, int n_edges,
                                    int max_edge_size, Penalty kind) {
  Require(n_vertices >= 2 && n_edges >= 1 && max_edge_size >= 2,
          ErrorCode::kInvalidArgument,
          "need n >= 2, at least one edge, max edge size >= 2");
  Rng rng(seed);
  HypergraphCutInstance inst;
  inst.n_vertices = n_vertices;
  const int cap = std::min(max_edge_size, n_vertices);
  std::vector<int> pool(static_cast<size_t>(n_vertices));
  for (int e = 0; e < n_edges; ++e) {
    const int size = 2 + static_cast<int>(rng.Below(static_cast<uint64_t>(cap - 1)));
    std::iota(pool.begin(), pool.end(), 0);
    for (int j = 0; j < size; ++j) {
      const auto pick = j + static_cast<int>(rng.Below(static_cast<uint64_t>(n_vertices - j)));
      std::swap(pool[static_cast<size_t>(j)], pool[static_cast<size_t>(pick)]);
    }
    std::vector<int> edge(pool.begin(), pool.begin() + size);
    std::sort(edge.begin(), edge.end());
    inst.hyperedges.push_back(std::move(edge));
    inst.penalties.push_back(kind);
  }
  return inst;
}

// ---------------------------------------------------------------------------

Instance::Instance(Data data)
    : data_(std::make_shared<const Data>(std::move(data))),
      function_(Build(data_)) {}

DecomposableFunction Instance::Build(const std::shared_ptr<const Data>& data) {
  if (const auto* c = std::get_if<CoverageInstance>(data.get())) {
    return ToFunction(std::shared_ptr<const CoverageInstance>(data, c));
  }
  if (const auto* f = std::get_if<FacilityLocationInstance>(data.get())) {
    return ToFunction(std::shared_ptr<const FacilityLocationInstance>(data, f));
  }
  if (const auto* h = std::get_if<HypergraphCutInstance>(data.get())) {
    return ToFunction(std::shared_ptr<const HypergraphCutInstance>(data, h));
  }
  return ToFunction(std::get<TableInstance>(*data));
}

std::string Instance::type_name() const {
  switch (data_->index()) {
    case 0:
      return "coverage";
    case 1:
      return "facility";
    case 2:
      return "hypergraph";
    default:
      return "table";
  }
}

}  // namespace submod
