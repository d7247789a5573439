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

#include "submod/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "submod/error.hpp"

namespace submod {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(out.good(), ErrorCode::kIo, "cannot write '" + path + "'");
  out << contents;
  Require(out.good(), ErrorCode::kIo, "write to '" + path + "' failed");
}

namespace {

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T Field(const json& j, const char* key) {
  Require(j.is_object() && j.contains(key), ErrorCode::kParse,
          std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("bad field '") + key + "': " + e.what());
  }
}

Instance ParseCoverage(const json& j) {
  const int n_sets = Field<int>(j, "n_sets");
  const int universe = Field<int>(j, "universe_size");
  const auto raw = Field<std::vector<std::vector<int>>>(j, "edges");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    Require(e.size() == 2, ErrorCode::kParse,
            "coverage edges are [component_id, ground_id] pairs");
    edges.emplace_back(e[0], e[1]);
  }
  return Instance(CoverageInstance::FromEdges(n_sets, universe, edges));
}

Instance ParseFacility(const json& j) {
  FacilityLocationInstance inst;
  inst.n_facilities = Field<int>(j, "n_facilities");
  inst.n_clients = Field<int>(j, "n_clients");
  inst.cost = Field<std::vector<double>>(j, "costs");
  Require(inst.n_facilities >= 1 && inst.n_clients >= 1, ErrorCode::kParse,
          "facility instance needs n_facilities, n_clients >= 1");
  Require(inst.cost.size() ==
              static_cast<size_t>(inst.n_facilities) * inst.n_clients,
          ErrorCode::kParse, "costs must hold n_clients * n_facilities values");
  for (double c : inst.cost) {
    Require(std::isfinite(c) && c >= 0.0, ErrorCode::kParse,
            "costs must be finite and nonnegative");
  }
  return Instance(std::move(inst));
}

Instance ParseHypergraph(const json& j) {
  HypergraphCutInstance inst;
  inst.n_vertices = Field<int>(j, "n_vertices");
  inst.hyperedges = Field<std::vector<std::vector<int>>>(j, "hyperedges");
  for (auto& e : inst.hyperedges) std::sort(e.begin(), e.end());
  for (const auto& name : Field<std::vector<std::string>>(j, "penalties")) {
    inst.penalties.push_back(ParsePenalty(name));
  }
  inst.Validate();
  return Instance(std::move(inst));
}

Instance ParseTable(const json& j) {
  TableInstance inst;
  inst.n = Field<int>(j, "n");
  for (auto& values : Field<std::vector<std::vector<double>>>(j, "tables")) {
    TableFunction t{inst.n, std::move(values)};
    t.Validate();
    inst.tables.push_back(std::move(t));
  }
  Require(!inst.tables.empty(), ErrorCode::kParse, "table instance is empty");
  return Instance(std::move(inst));
}

}  // namespace

Instance ParseInstanceJson(const std::string& text) {
  const json j = ParseJson(text);
  const auto type = Field<std::string>(j, "type");
  if (type == "coverage") return ParseCoverage(j);
  if (type == "facility") return ParseFacility(j);
  if (type == "hypergraph") return ParseHypergraph(j);
  if (type == "table") return ParseTable(j);
  Fail(ErrorCode::kParse, "unknown instance type '" + type + "'");
}

std::string InstanceToJson(const Instance& inst) {
  json j;
  j["type"] = inst.type_name();
  if (const auto* c = inst.coverage()) {
    j["n_sets"] = c->n_sets;
    j["universe_size"] = c->universe_size();
    json edges = json::array();
    for (int i = 0; i < c->universe_size(); ++i) {
      for (int a : c->covers[static_cast<size_t>(i)]) edges.push_back({i, a});
    }
    j["edges"] = std::move(edges);
  } else if (const auto* f = inst.facility()) {
    j["n_facilities"] = f->n_facilities;
    j["n_clients"] = f->n_clients;
    j["costs"] = f->cost;
  } else if (const auto* h = std::get_if<HypergraphCutInstance>(&inst.data())) {
    j["n_vertices"] = h->n_vertices;
    j["hyperedges"] = h->hyperedges;
    json kinds = json::array();
    for (Penalty p : h->penalties) kinds.push_back(PenaltyName(p));
    j["penalties"] = std::move(kinds);
  } else {
    const auto& t = std::get<TableInstance>(inst.data());
    j["n"] = t.n;
    json tables = json::array();
    for (const auto& table : t.tables) tables.push_back(table.values);
    j["tables"] = std::move(tables);
  }
  return j.dump() + "\n";
}

namespace {

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitComma(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(Trim(field));
  return out;
}

bool ParseNumber(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::vector<std::vector<std::string>> CsvRows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    rows.push_back(SplitComma(line));
  }
  return rows;
}

std::vector<std::array<double, 2>> ParsePoints(const std::string& text,
                                               const char* what) {
  std::vector<std::array<double, 2>> points;
  const auto rows = CsvRows(text);
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    double x = 0.0;
    double y = 0.0;
    const bool numeric =
        row.size() >= 2 && ParseNumber(row[0], x) && ParseNumber(row[1], y);
    if (!numeric) {
      Require(r == 0, ErrorCode::kParse,
              std::string("bad ") + what + " line " + std::to_string(r + 1));
      continue;  // header
    }
    points.push_back({x, y});
  }
  Require(!points.empty(), ErrorCode::kParse,
          std::string("no ") + what + " in input");
  return points;
}

}  // namespace

std::string WeightsToCsv(const SparsifierWeights& w) {
  std::string out = "component_id,weight\n";
  for (int i : w.support()) {
    out += std::to_string(i) + "," + FormatDouble(w[i]) + "\n";
  }
  return out;
}

SparsifierWeights ParseWeightsCsv(const std::string& text, int num_components) {
  const auto rows = CsvRows(text);
  Require(!rows.empty() && rows[0].size() == 2 && rows[0][0] == "component_id" &&
              rows[0][1] == "weight",
          ErrorCode::kParse, "weights CSV must start with 'component_id,weight'");
  std::vector<double> weights(static_cast<size_t>(num_components), 0.0);
  std::vector<bool> seen(static_cast<size_t>(num_components), false);
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    double id = 0.0;
    double weight = 0.0;
    Require(row.size() == 2 && ParseNumber(row[0], id) &&
                ParseNumber(row[1], weight) && id == std::floor(id),
            ErrorCode::kParse, "bad weights line " + std::to_string(r + 1));
    Require(id >= 0 && id < num_components, ErrorCode::kOutOfRange,
            "component id " + row[0] + " does not exist in the instance");
    const auto i = static_cast<size_t>(id);
    Require(!seen[i], ErrorCode::kParse, "duplicate component id " + row[0]);
    seen[i] = true;
    weights[i] = weight;
  }
  return SparsifierWeights(std::move(weights));
}

std::string SidecarJson(const SparsifierWeights& w) {
  json j;
  j["n_components"] = w.length();
  j["size"] = w.size();
  if (const auto& r = w.record()) {
    double expected = 0.0;
    for (double p : r->probabilities) expected += p;
    j["epsilon"] = r->epsilon;
    j["delta"] = r->delta;
    j["kappa"] = r->kappa;
    j["sum_p"] = r->sum_p;
    j["expected_size"] = expected;
    j["mode"] = r->pi_mode;
    j["seed"] = r->seed;
    j["guarantee"] = r->guarantee;
  }
  return j.dump(2) + "\n";
}

std::string ReportToJson(const VerificationReport& report) {
  auto number = [](double v) -> json {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
  };
  json j;
  j["pass"] = report.pass;
  j["epsilon"] = report.epsilon;
  j["worst_low"] = number(report.worst_low);
  j["worst_high"] = number(report.worst_high);
  j["witness_low"] = report.witness_low.Indices();
  j["witness_high"] = report.witness_high.Indices();
  if (!report.witness_low_point.empty()) {
    j["witness_low_point"] = report.witness_low_point;
  }
  if (!report.witness_high_point.empty()) {
    j["witness_high_point"] = report.witness_high_point;
  }
  j["sets_checked"] = report.sets_checked;
  return j.dump(2) + "\n";
}

std::unique_ptr<PartitionMatroid> ParsePartitionMatroidJson(
    const std::string& text, int n) {
  const json j = ParseJson(text);
  return std::make_unique<PartitionMatroid>(
      n, Field<std::vector<std::vector<int>>>(j, "blocks"),
      Field<std::vector<int>>(j, "capacities"));
}

FacilityLocationInstance LoadPickupCsv(const std::string& points_text,
                                       const std::string& locations_text) {
  const auto pickups = ParsePoints(points_text, "pickups");
  const auto locations = ParsePoints(locations_text, "locations");
  std::vector<std::vector<double>> distances;
  distances.reserve(pickups.size());
  for (const auto& p : pickups) {
    std::vector<double> row;
    row.reserve(locations.size());
    for (const auto& q : locations) {
      row.push_back(std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]));
    }
    distances.push_back(std::move(row));
  }
  return UberTransform(distances);
}

CoverageInstance LoadBipartiteCsv(const std::string& text) {
  std::unordered_map<std::string, int> left_ids;
  std::unordered_map<std::string, int> right_ids;
  std::vector<std::pair<int, int>> edges;
  const auto rows = CsvRows(text);
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    Require(row.size() >= 2, ErrorCode::kParse,
            "bad edge line " + std::to_string(r + 1));
    if (r == 0) continue;  // header
    auto id = [](std::unordered_map<std::string, int>& ids,
                 const std::string& key) {
      return ids.try_emplace(key, static_cast<int>(ids.size())).first->second;
    };
    const int left = id(left_ids, row[0]);
    const int right = id(right_ids, row[1]);
    edges.emplace_back(right, left);
  }
  Require(!edges.empty(), ErrorCode::kParse, "no edges in input");
  return CoverageInstance::FromEdges(static_cast<int>(left_ids.size()),
                                     static_cast<int>(right_ids.size()), edges);
}

}  // namespace submod
