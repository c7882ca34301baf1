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

#ifndef WARDROP_CORE_NETWORK_H_
#define WARDROP_CORE_NETWORK_H_

#include <string>
#include <vector>

namespace wardrop {

struct Arc {
  std::string id;  // Resource id carried by this arc.
  std::string tail;
  std::string head;

  bool operator==(const Arc&) const = default;
};

// Directed-graph annotation of a network congestion game. Every resource of
// the owning instance is one arc; every strategy is a simple source-sink path.
struct NetworkAnnotation {
  std::vector<std::string> nodes;
  std::vector<Arc> arcs;
  std::string source;
  std::string sink;

  bool operator==(const NetworkAnnotation&) const = default;
};

}  // namespace wardrop

#endif  // WARDROP_CORE_NETWORK_H_
