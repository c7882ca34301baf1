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

#include "wardrop/graphs/alternating.h"

#include <deque>
#include <limits>
#include <map>
#include <set>

#include "wardrop/core/errors.h"

namespace wardrop {
namespace {

const NetworkAnnotation& RequireNetwork(const GameInstance& instance) {
  if (!instance.graph() || !instance.SingleCommodity()) {
    throw PreconditionError(
        "alternating paths need a single-commodity network instance");
  }
  return *instance.graph();
}

std::map<std::string, int> NodeIndex(const NetworkAnnotation& graph) {
  std::map<std::string, int> index;
  for (const std::string& node : graph.nodes) {
    index.emplace(node, static_cast<int>(index.size()));
  }
  for (const Arc& arc : graph.arcs) {
    index.emplace(arc.tail, static_cast<int>(index.size()));
    index.emplace(arc.head, static_cast<int>(index.size()));
  }
  return index;
}

}  // namespace

const char* ArcLabelName(ArcLabel label) {
  switch (label) {
    case ArcLabel::kRemoved:
      return "removed";
    case ArcLabel::kZ:
      return "Z";
    case ArcLabel::kX:
      return "X";
  }
  return "unknown";
}

std::vector<ArcLabel> LabelArcs(const GameInstance& instance, const Flow& x,
                                const Flow& z, const Tolerance& tol) {
  const NetworkAnnotation& graph = RequireNetwork(instance);
  std::vector<ArcLabel> labels;
  for (const Arc& arc : graph.arcs) {
    int e = instance.RequireResource(arc.id);
    double xa = x.Load(e);
    double za = z.Load(e);
    if (xa <= tol.abs && za <= tol.abs) {
      labels.push_back(ArcLabel::kRemoved);
    } else if (za > tol.abs && za >= xa - tol.abs) {
      labels.push_back(ArcLabel::kZ);
    } else {
      labels.push_back(ArcLabel::kX);
    }
  }
  return labels;
}

AlternatingPath ComputeAlternatingPath(const GameInstance& instance,
                                       const Flow& x, const Flow& z,
                                       const Tolerance& tol) {
  const NetworkAnnotation& graph = RequireNetwork(instance);
  AlternatingPath result;
  result.labels = LabelArcs(instance, x, z, tol);
  std::map<std::string, int> index = NodeIndex(graph);
  const int n = static_cast<int>(index.size());
  // Moves out of each node: (arc, forward, next node, weight).
  struct Move {
    int arc;
    bool forward;
    int next;
  };
  std::vector<std::vector<Move>> moves(n);
  for (int a = 0; a < static_cast<int>(graph.arcs.size()); ++a) {
    int tail = index[graph.arcs[a].tail];
    int head = index[graph.arcs[a].head];
    if (result.labels[a] == ArcLabel::kZ) moves[tail].push_back({a, true, head});
    if (result.labels[a] == ArcLabel::kX) moves[head].push_back({a, false, tail});
  }
  // 0-1 breadth-first search; X arcs cost one.
  const int source = index[graph.source];
  const int sink = index[graph.sink];
  std::vector<int> dist(n, std::numeric_limits<int>::max());
  std::vector<Move> via(n, {-1, true, -1});
  std::vector<int> parent(n, -1);
  std::deque<int> queue = {source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Move& move : moves[u]) {
      int weight = move.forward ? 0 : 1;
      if (dist[u] + weight < dist[move.next]) {
        dist[move.next] = dist[u] + weight;
        via[move.next] = move;
        parent[move.next] = u;
        if (weight == 0) {
          queue.push_front(move.next);
        } else {
          queue.push_back(move.next);
        }
      }
    }
  }
  if (dist[sink] == std::numeric_limits<int>::max()) {
    throw StructuralError("no alternating source-sink path exists");
  }
  std::vector<AlternatingStep> reversed;
  for (int node = sink; node != source; node = parent[node]) {
    reversed.push_back({via[node].arc, via[node].forward});
  }
  result.steps.assign(reversed.rbegin(), reversed.rend());
  result.q = dist[sink];
  return result;
}

std::vector<std::string> FindZDominantPath(const GameInstance& instance,
                                           const Flow& x, const Flow& z,
                                           const Tolerance& tol) {
  const NetworkAnnotation& graph = RequireNetwork(instance);
  std::vector<ArcLabel> labels = LabelArcs(instance, x, z, tol);
  std::map<std::string, int> index = NodeIndex(graph);
  const int n = static_cast<int>(index.size());
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < static_cast<int>(graph.arcs.size()); ++a) {
    if (labels[a] == ArcLabel::kZ) out[index[graph.arcs[a].tail]].push_back(a);
  }
  const int source = index[graph.source];
  const int sink = index[graph.sink];
  std::vector<int> via(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<int> queue = {source};
  seen[source] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int a : out[u]) {
      int v = index[graph.arcs[a].head];
      if (seen[v]) continue;
      seen[v] = true;
      via[v] = a;
      queue.push_back(v);
    }
  }
  if (!seen[sink]) {
    throw StructuralError("no source-sink path inside the arcs with z >= x");
  }
  std::vector<std::string> path;
  for (int node = sink; node != source;
       node = index[graph.arcs[via[node]].tail]) {
    path.insert(path.begin(), graph.arcs[via[node]].id);
  }
  return path;
}

std::string AlternatingPathError(const GameInstance& instance,
                                 const AlternatingPath& path) {
  const NetworkAnnotation& graph = RequireNetwork(instance);
  std::string node = graph.source;
  std::set<std::string> visited = {node};
  int backward = 0;
  for (const AlternatingStep& step : path.steps) {
    if (step.arc < 0 || step.arc >= static_cast<int>(graph.arcs.size())) {
      return "arc index out of range";
    }
    const Arc& arc = graph.arcs[step.arc];
    ArcLabel label = path.labels.at(step.arc);
    if (step.forward) {
      if (label != ArcLabel::kZ) return "forward arc " + arc.id + " not in Z";
      if (arc.tail != node) return "arc " + arc.id + " does not continue";
      node = arc.head;
    } else {
      if (label != ArcLabel::kX) return "backward arc " + arc.id + " not in X";
      if (arc.head != node) return "arc " + arc.id + " does not continue";
      node = arc.tail;
      ++backward;
    }
    if (!visited.insert(node).second) return "node " + node + " revisited";
  }
  if (node != graph.sink) return "path does not end at the sink";
  if (backward != path.q) return "q does not count the backward arcs";
  return "";
}

}  // namespace wardrop
