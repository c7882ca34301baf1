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

#ifndef WARDROP_CORE_FLOW_H_
#define WARDROP_CORE_FLOW_H_

#include <span>
#include <string>
#include <vector>

#include "wardrop/core/instance.h"
#include "wardrop/core/tolerance.h"

namespace wardrop {

// Per-class strategy flows f_{P,j} of every commodity, with resource loads
// derived once at construction.
class Flow {
 public:
  // class_path_flows[i][j][p]: flow of class j of commodity i on strategy p.
  using ClassPathFlows = std::vector<std::vector<std::vector<double>>>;

  Flow() = default;
  // Throws InputError when the shape disagrees with the instance.
  Flow(const GameInstance& instance, ClassPathFlows class_path_flows);

  // Aggregate strategy flows path_flows[i][p]; every strategy's flow is split
  // over the commodity's classes in proportion to the class demands.
  static Flow FromPathFlows(const GameInstance& instance,
                            const std::vector<std::vector<double>>& path_flows);

  int num_commodities() const {
    return static_cast<int>(class_path_flows_.size());
  }
  int num_classes(int commodity) const {
    return static_cast<int>(class_path_flows_[commodity].size());
  }

  double ClassPathFlow(int commodity, int cls, int strategy) const {
    return class_path_flows_[commodity][cls][strategy];
  }
  double PathFlow(int commodity, int strategy) const {
    return path_flows_[commodity][strategy];
  }
  const ClassPathFlows& class_path_flows() const { return class_path_flows_; }
  const std::vector<std::vector<double>>& path_flows() const {
    return path_flows_;
  }

  // Total load f_e and per-commodity load f_e^i.
  double Load(int resource) const { return loads_[resource]; }
  double CommodityLoad(int commodity, int resource) const {
    return commodity_loads_[commodity][resource];
  }
  std::span<const double> loads() const { return loads_; }

  // Recomputes loads from the path flows and compares with the cached
  // values bit for bit.
  bool CacheConsistent(const GameInstance& instance) const;

  bool operator==(const Flow& other) const {
    return class_path_flows_ == other.class_path_flows_;
  }

 private:
  void ComputeDerived(const GameInstance& instance,
                      std::vector<std::vector<double>>& path_flows,
                      std::vector<std::vector<double>>& commodity_loads,
                      std::vector<double>& loads) const;

  ClassPathFlows class_path_flows_;
  std::vector<std::vector<double>> path_flows_;
  std::vector<std::vector<double>> commodity_loads_;
  std::vector<double> loads_;
};

// Nonnegativity, commodity totals and class totals against the instance's
// classes. Empty when the flow is feasible.
std::vector<std::string> FeasibilityViolations(const GameInstance& instance,
                                               const Flow& flow,
                                               const Tolerance& tol = {});

}  // namespace wardrop

#endif  // WARDROP_CORE_FLOW_H_
