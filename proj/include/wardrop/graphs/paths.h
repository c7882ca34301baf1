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

#ifndef WARDROP_GRAPHS_PATHS_H_
#define WARDROP_GRAPHS_PATHS_H_

#include <string>
#include <vector>

#include "wardrop/core/instance.h"
#include "wardrop/core/network.h"

namespace wardrop {

constexpr long kMaxEnumeratedPaths = 100000;

// Every simple source-sink path as an arc-id sequence, by depth-first search
// over arcs in declaration order. Throws RefusalError past `cap` paths.
std::vector<std::vector<std::string>> EnumeratePaths(
    const NetworkAnnotation& graph, long cap = kMaxEnumeratedPaths);

// Single-commodity network instance whose strategies are all simple
// source-sink paths; `latencies` are matched to arcs by position.
GameInstance NetworkInstance(const NetworkAnnotation& graph,
                             const std::vector<LatencyFn>& latencies,
                             double demand,
                             std::vector<SensitivityClass> classes = {});

// The arc ids of `path` ordered from source to sink, or empty when the set is
// not a simple source-sink path.
std::vector<std::string> OrderPath(const NetworkAnnotation& graph,
                                   const std::vector<std::string>& path);

}  // namespace wardrop

#endif  // WARDROP_GRAPHS_PATHS_H_
