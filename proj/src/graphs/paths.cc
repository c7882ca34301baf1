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

#include "wardrop/graphs/paths.h"

#include <map>
#include <set>
#include <utility>

#include "wardrop/core/errors.h"

namespace wardrop {
namespace {

struct Search {
  const NetworkAnnotation& graph;
  std::map<std::string, std::vector<int>> out_arcs;
  std::set<std::string> on_path;
  std::vector<std::string> current;
  std::vector<std::vector<std::string>> found;
  long cap;

  void Visit(const std::string& node) {
    if (node == graph.sink) {
      found.push_back(current);
      if (static_cast<long>(found.size()) > cap) {
        throw RefusalError("more than " + std::to_string(cap) +
                           " source-sink paths");
      }
      return;
    }
    auto it = out_arcs.find(node);
    if (it == out_arcs.end()) return;
    for (int a : it->second) {
      const Arc& arc = graph.arcs[a];
      if (on_path.contains(arc.head)) continue;
      on_path.insert(arc.head);
      current.push_back(arc.id);
      Visit(arc.head);
      current.pop_back();
      on_path.erase(arc.head);
    }
  }
};

}  // namespace

std::vector<std::vector<std::string>> EnumeratePaths(
    const NetworkAnnotation& graph, long cap) {
  Search search{graph, {}, {}, {}, {}, cap};
  for (int a = 0; a < static_cast<int>(graph.arcs.size()); ++a) {
    search.out_arcs[graph.arcs[a].tail].push_back(a);
  }
  search.on_path.insert(graph.source);
  search.Visit(graph.source);
  return std::move(search.found);
}

GameInstance NetworkInstance(const NetworkAnnotation& graph,
                             const std::vector<LatencyFn>& latencies,
                             double demand,
                             std::vector<SensitivityClass> classes) {
  if (latencies.size() != graph.arcs.size()) {
    throw InputError("one latency per arc required");
  }
  std::vector<Resource> resources;
  for (size_t a = 0; a < graph.arcs.size(); ++a) {
    resources.push_back({graph.arcs[a].id, latencies[a]});
  }
  Commodity commodity;
  commodity.demand = demand;
  commodity.strategies = EnumeratePaths(graph);
  commodity.classes = std::move(classes);
  return GameInstance(std::move(resources), {std::move(commodity)}, graph);
}

std::vector<std::string> OrderPath(const NetworkAnnotation& graph,
                                   const std::vector<std::string>& path) {
  std::map<std::string, const Arc*> by_id;
  for (const Arc& arc : graph.arcs) by_id.emplace(arc.id, &arc);
  std::map<std::string, const Arc*> leaving;
  for (const std::string& id : path) {
    auto it = by_id.find(id);
    if (it == by_id.end()) return {};
    if (!leaving.emplace(it->second->tail, it->second).second) return {};
  }
  std::vector<std::string> ordered;
  std::set<std::string> seen = {graph.source};
  std::string node = graph.source;
  while (node != graph.sink) {
    auto it = leaving.find(node);
    if (it == leaving.end()) return {};
    ordered.push_back(it->second->id);
    node = it->second->head;
    if (!seen.insert(node).second) return {};
  }
  if (ordered.size() != path.size()) return {};
  return ordered;
}

}  // namespace wardrop
