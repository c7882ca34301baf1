// Copyright 2023 The Authors.
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

#include "wardrop/core/evaluation.h"

#include <algorithm>
#include <map>
#include <set>

#include "wardrop/core/errors.h"
#include "wardrop/core/sensitivity.h"

namespace wardrop {
namespace {

// Orders the arcs of `ids` into a source-sink walk; returns an error message
// or an empty string when they form a simple path.
std::string SimplePathError(const NetworkAnnotation& graph,
                            const std::map<std::string, const Arc*>& arcs,
                            const std::vector<std::string>& ids) {
  std::map<std::string, const Arc*> out_arc;
  for (const std::string& id : ids) {
    auto it = arcs.find(id);
    if (it == arcs.end()) return "resource '" + id + "' is not an arc";
    if (!out_arc.emplace(it->second->tail, it->second).second) {
      return "two arcs leave node '" + it->second->tail + "'";
    }
  }
  std::set<std::string> visited = {graph.source};
  std::string node = graph.source;
  size_t used = 0;
  while (node != graph.sink) {
    auto it = out_arc.find(node);
    if (it == out_arc.end()) return "path stops at node '" + node + "'";
    node = it->second->head;
    ++used;
    if (!visited.insert(node).second) return "path revisits '" + node + "'";
  }
  if (used != ids.size()) return "arcs outside the source-sink path";
  return "";
}

void ValidateGraph(const GameInstance& instance, std::vector<Violation>& out) {
  const NetworkAnnotation& graph = *instance.graph();
  std::set<std::string> nodes(graph.nodes.begin(), graph.nodes.end());
  if (nodes.size() != graph.nodes.size()) {
    out.push_back({"graph", "duplicate node names"});
  }
  if (!nodes.contains(graph.source)) {
    out.push_back({"graph", "source '" + graph.source + "' is not a node"});
  }
  if (!nodes.contains(graph.sink)) {
    out.push_back({"graph", "sink '" + graph.sink + "' is not a node"});
  }
  std::map<std::string, const Arc*> arcs;
  for (const Arc& arc : graph.arcs) {
    const std::string where = "graph arc '" + arc.id + "'";
    if (!arcs.emplace(arc.id, &arc).second) {
      out.push_back({where, "resource carried by more than one arc"});
    }
    if (!nodes.contains(arc.tail) || !nodes.contains(arc.head)) {
      out.push_back({where, "endpoint is not a declared node"});
    }
    if (instance.FindResource(arc.id) == GameInstance::kUnknownResource) {
      out.push_back({where, "no resource with this id"});
    }
  }
  for (const Resource& resource : instance.resources()) {
    if (!arcs.contains(resource.id)) {
      out.push_back({"resource '" + resource.id + "'", "not mapped to an arc"});
    }
  }
  for (int i = 0; i < instance.num_commodities(); ++i) {
    const auto& strategies = instance.commodities()[i].strategies;
    for (size_t p = 0; p < strategies.size(); ++p) {
      std::string error = SimplePathError(graph, arcs, strategies[p]);
      if (!error.empty()) {
        out.push_back({"commodity " + std::to_string(i) + " strategy " +
                           std::to_string(p),
                       "not a simple source-sink path: " + error});
      }
    }
  }
}

}  // namespace

double PathLatency(const GameInstance& instance, const Flow& flow,
                   std::span<const std::string> path) {
  double total = 0.0;
  for (const std::string& id : path) {
    int e = instance.RequireResource(id);
    total += instance.latency(e)(flow.Load(e));
  }
  return total;
}

double StrategyLatency(const GameInstance& instance, const Flow& flow,
                       int commodity, int strategy) {
  double total = 0.0;
  for (int e : instance.Strategy(commodity, strategy)) {
    total += instance.latency(e)(flow.Load(e));
  }
  return total;
}

std::vector<double> ResourceLatencies(const GameInstance& instance,
                                      const Flow& flow) {
  std::vector<double> out(instance.num_resources());
  for (int e = 0; e < instance.num_resources(); ++e) {
    out[e] = instance.latency(e)(flow.Load(e));
  }
  return out;
}

double SocialCost(const GameInstance& instance, const Flow& flow,
                  const Tolerance& tol) {
  std::vector<std::string> violations =
      FeasibilityViolations(instance, flow, tol);
  if (!violations.empty()) {
    throw InvariantError("social cost of an infeasible flow: " +
                         violations.front());
  }
  double total = 0.0;
  for (int e = 0; e < instance.num_resources(); ++e) {
    double load = flow.Load(e);
    if (load != 0.0) total += load * instance.latency(e)(load);
  }
  return total;
}

double PathwiseSocialCost(const GameInstance& instance, const Flow& flow) {
  double total = 0.0;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      double f = flow.PathFlow(i, p);
      if (f != 0.0) total += f * StrategyLatency(instance, flow, i, p);
    }
  }
  return total;
}

double BeckmannPotential(const GameInstance& instance,
                         std::span<const double> loads) {
  double total = 0.0;
  for (int e = 0; e < instance.num_resources(); ++e) {
    total += instance.latency(e).Integral(loads[e]);
  }
  return total;
}

double BeckmannPotential(const GameInstance& instance, const Flow& flow) {
  return BeckmannPotential(instance, flow.loads());
}

std::vector<Violation> ValidateInstance(const GameInstance& instance,
                                        const Tolerance& tol) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  for (const Resource& resource : instance.resources()) {
    const std::string where = "resource '" + resource.id + "'";
    if (resource.id.empty()) out.push_back({"resource", "empty id"});
    if (!ids.insert(resource.id).second) {
      out.push_back({where, "declared more than once"});
    }
    for (const std::string& message : resource.latency.Violations()) {
      out.push_back({where, message});
    }
  }
  for (int i = 0; i < instance.num_commodities(); ++i) {
    const Commodity& commodity = instance.commodities()[i];
    const std::string where = "commodity " + std::to_string(i);
    if (!(commodity.demand > 0.0)) {
      out.push_back({where, "demand must be > 0"});
    }
    if (commodity.strategies.empty()) {
      out.push_back({where, "no strategies"});
    }
    std::set<std::vector<std::string>> seen;
    for (size_t p = 0; p < commodity.strategies.size(); ++p) {
      const std::string path_where = where + " strategy " + std::to_string(p);
      std::vector<std::string> sorted = commodity.strategies[p];
      std::sort(sorted.begin(), sorted.end());
      if (sorted.empty()) out.push_back({path_where, "empty strategy"});
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        out.push_back({path_where, "repeats a resource"});
      }
      for (const std::string& id : sorted) {
        if (instance.FindResource(id) == GameInstance::kUnknownResource) {
          out.push_back({path_where, "undeclared resource '" + id + "'"});
        }
      }
      if (!seen.insert(sorted).second) {
        out.push_back({path_where, "duplicates an earlier strategy"});
      }
    }
  }
  std::vector<std::string> class_errors =
      SensitivityProfile::FromInstance(instance).Violations(instance, tol);
  for (const std::string& message : class_errors) {
    out.push_back({"classes", message});
  }
  if (instance.graph()) ValidateGraph(instance, out);
  return out;
}

void RequireValidInstance(const GameInstance& instance, const Tolerance& tol) {
  std::vector<Violation> violations = ValidateInstance(instance, tol);
  if (violations.empty()) return;
  std::string message = "invalid instance:";
  for (size_t k = 0; k < violations.size() && k < 5; ++k) {
    message += " [" + violations[k].location + "] " + violations[k].message;
  }
  if (violations.size() > 5) {
    message += " (+" + std::to_string(violations.size() - 5) + " more)";
  }
  throw InputError(message);
}

}  // namespace wardrop
