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

#ifndef WARDROP_GRAPHS_SP_TREE_H_
#define WARDROP_GRAPHS_SP_TREE_H_

#include <memory>
#include <string>
#include <vector>

#include "wardrop/core/network.h"

namespace wardrop {

// Series-parallel composition tree. Leaves carry arc ids.
class SPTree {
 public:
  enum class Kind { kLeaf, kSeries, kParallel };

  static SPTree Leaf(std::string arc);
  static SPTree Series(SPTree first, SPTree second);
  static SPTree Parallel(SPTree first, SPTree second);

  Kind kind() const { return kind_; }
  const std::string& arc() const { return arc_; }
  const SPTree& first() const { return *first_; }
  const SPTree& second() const { return *second_; }

  // Leaf arc ids, left to right.
  std::vector<std::string> Flatten() const;
  int Depth() const;

  // The two-terminal graph the tree composes. Internal nodes of series
  // compositions are named "n1", "n2", ... in creation order.
  NetworkAnnotation ToNetwork(const std::string& source = "s",
                              const std::string& sink = "t") const;

 private:
  void Build(const std::string& tail, const std::string& head, int& next_node,
             NetworkAnnotation& graph) const;

  Kind kind_ = Kind::kLeaf;
  std::string arc_;
  std::shared_ptr<const SPTree> first_;
  std::shared_ptr<const SPTree> second_;
};

// True when repeated series and parallel reductions collapse the graph to a
// single source-sink arc.
bool IsTwoTerminalSeriesParallel(const NetworkAnnotation& graph);

}  // namespace wardrop

#endif  // WARDROP_GRAPHS_SP_TREE_H_
