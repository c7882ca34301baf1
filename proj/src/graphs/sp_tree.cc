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

#include "wardrop/graphs/sp_tree.h"

#include <algorithm>
#include <map>
#include <utility>

namespace wardrop {

SPTree SPTree::Leaf(std::string arc) {
  SPTree tree;
  tree.kind_ = Kind::kLeaf;
  tree.arc_ = std::move(arc);
  return tree;
}

SPTree SPTree::Series(SPTree first, SPTree second) {
  SPTree tree;
  tree.kind_ = Kind::kSeries;
  tree.first_ = std::make_shared<const SPTree>(std::move(first));
  tree.second_ = std::make_shared<const SPTree>(std::move(second));
  return tree;
}

SPTree SPTree::Parallel(SPTree first, SPTree second) {
  SPTree tree = Series(std::move(first), std::move(second));
  tree.kind_ = Kind::kParallel;
  return tree;
}

std::vector<std::string> SPTree::Flatten() const {
  if (kind_ == Kind::kLeaf) return {arc_};
  std::vector<std::string> out = first_->Flatten();
  std::vector<std::string> rest = second_->Flatten();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

int SPTree::Depth() const {
  if (kind_ == Kind::kLeaf) return 0;
  return 1 + std::max(first_->Depth(), second_->Depth());
}

void SPTree::Build(const std::string& tail, const std::string& head,
                   int& next_node, NetworkAnnotation& graph) const {
  switch (kind_) {
    case Kind::kLeaf:
      graph.arcs.push_back({arc_, tail, head});
      return;
    case Kind::kParallel:
      first_->Build(tail, head, next_node, graph);
      second_->Build(tail, head, next_node, graph);
      return;
    case Kind::kSeries: {
      std::string middle = "n" + std::to_string(next_node++);
      graph.nodes.push_back(middle);
      first_->Build(tail, middle, next_node, graph);
      second_->Build(middle, head, next_node, graph);
      return;
    }
  }
}

NetworkAnnotation SPTree::ToNetwork(const std::string& source,
                                    const std::string& sink) const {
  NetworkAnnotation graph;
  graph.nodes = {source};
  graph.source = source;
  graph.sink = sink;
  int next_node = 1;
  Build(source, sink, next_node, graph);
  graph.nodes.push_back(sink);
  return graph;
}

bool IsTwoTerminalSeriesParallel(const NetworkAnnotation& graph) {
  if (graph.arcs.empty() || graph.source == graph.sink) return false;
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const Arc& arc : graph.arcs) {
    if (arc.tail == arc.head) return false;
    arcs.emplace_back(arc.tail, arc.head);
  }
  bool changed = true;
  while (changed && arcs.size() > 1) {
    changed = false;
    // Parallel reduction: drop duplicates of an endpoint pair.
    std::sort(arcs.begin(), arcs.end());
    auto last = std::unique(arcs.begin(), arcs.end());
    if (last != arcs.end()) {
      arcs.erase(last, arcs.end());
      changed = true;
    }
    // Series reduction: an inner node with one arc in and one arc out.
    std::map<std::string, std::pair<int, int>> degree;
    for (const auto& [tail, head] : arcs) {
      ++degree[tail].second;
      ++degree[head].first;
    }
    for (const auto& [node, in_out] : degree) {
      if (node == graph.source || node == graph.sink) continue;
      if (in_out.first != 1 || in_out.second != 1) continue;
      auto into = std::find_if(arcs.begin(), arcs.end(),
                               [&](const auto& a) { return a.second == node; });
      std::string tail = into->first;
      arcs.erase(into);
      auto out = std::find_if(arcs.begin(), arcs.end(),
                              [&](const auto& a) { return a.first == node; });
      std::string head = out->second;
      arcs.erase(out);
      if (tail == head) return false;
      arcs.emplace_back(tail, head);
      changed = true;
      break;
    }
  }
  return arcs.size() == 1 && arcs[0].first == graph.source &&
         arcs[0].second == graph.sink;
}

}  // namespace wardrop
