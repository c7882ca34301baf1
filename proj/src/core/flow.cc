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

#include "wardrop/core/flow.h"

#include <utility>

#include "wardrop/core/errors.h"

namespace wardrop {

Flow::Flow(const GameInstance& instance, ClassPathFlows class_path_flows)
    : class_path_flows_(std::move(class_path_flows)) {
  if (num_commodities() != instance.num_commodities()) {
    throw InputError("flow has " + std::to_string(num_commodities()) +
                     " commodities, instance has " +
                     std::to_string(instance.num_commodities()));
  }
  for (int i = 0; i < num_commodities(); ++i) {
    if (num_classes(i) != instance.num_classes(i)) {
      throw InputError("flow of commodity " + std::to_string(i) + " has " +
                       std::to_string(num_classes(i)) + " classes, expected " +
                       std::to_string(instance.num_classes(i)));
    }
    for (const auto& per_strategy : class_path_flows_[i]) {
      if (static_cast<int>(per_strategy.size()) != instance.num_strategies(i)) {
        throw InputError("flow of commodity " + std::to_string(i) +
                         " does not cover its " +
                         std::to_string(instance.num_strategies(i)) +
                         " strategies");
      }
    }
  }
  ComputeDerived(instance, path_flows_, commodity_loads_, loads_);
}

Flow Flow::FromPathFlows(const GameInstance& instance,
                         const std::vector<std::vector<double>>& path_flows) {
  if (static_cast<int>(path_flows.size()) != instance.num_commodities()) {
    throw InputError("path flows do not match the commodity count");
  }
  ClassPathFlows per_class(path_flows.size());
  for (int i = 0; i < instance.num_commodities(); ++i) {
    const auto& classes = instance.classes(i);
    double total = 0.0;
    for (const SensitivityClass& cls : classes) total += cls.demand;
    for (size_t j = 0; j < classes.size(); ++j) {
      std::vector<double> share(path_flows[i].size());
      for (size_t p = 0; p < share.size(); ++p) {
        share[p] = classes.size() == 1
                       ? path_flows[i][p]
                       : path_flows[i][p] * (classes[j].demand / total);
      }
      per_class[i].push_back(std::move(share));
    }
  }
  return Flow(instance, std::move(per_class));
}

void Flow::ComputeDerived(const GameInstance& instance,
                          std::vector<std::vector<double>>& path_flows,
                          std::vector<std::vector<double>>& commodity_loads,
                          std::vector<double>& loads) const {
  const int num_resources = instance.num_resources();
  path_flows.assign(class_path_flows_.size(), {});
  commodity_loads.assign(class_path_flows_.size(),
                         std::vector<double>(num_resources, 0.0));
  loads.assign(num_resources, 0.0);
  for (int i = 0; i < num_commodities(); ++i) {
    const int num_strategies = instance.num_strategies(i);
    path_flows[i].assign(num_strategies, 0.0);
    for (const auto& per_strategy : class_path_flows_[i]) {
      for (int p = 0; p < num_strategies; ++p) {
        path_flows[i][p] += per_strategy[p];
      }
    }
    for (int p = 0; p < num_strategies; ++p) {
      for (int e : instance.RawStrategy(i, p)) {
        if (e >= 0) commodity_loads[i][e] += path_flows[i][p];
      }
    }
    for (int e = 0; e < num_resources; ++e) loads[e] += commodity_loads[i][e];
  }
}

bool Flow::CacheConsistent(const GameInstance& instance) const {
  std::vector<std::vector<double>> path_flows;
  std::vector<std::vector<double>> commodity_loads;
  std::vector<double> loads;
  ComputeDerived(instance, path_flows, commodity_loads, loads);
  return path_flows == path_flows_ && commodity_loads == commodity_loads_ &&
         loads == loads_;
}

std::vector<std::string> FeasibilityViolations(const GameInstance& instance,
                                               const Flow& flow,
                                               const Tolerance& tol) {
  std::vector<std::string> out;
  for (int i = 0; i < flow.num_commodities(); ++i) {
    const std::string where = "commodity " + std::to_string(i);
    double total = 0.0;
    for (int j = 0; j < flow.num_classes(i); ++j) {
      double class_total = 0.0;
      for (int p = 0; p < instance.num_strategies(i); ++p) {
        double value = flow.ClassPathFlow(i, j, p);
        if (value < 0.0) {
          out.push_back(where + " class " + std::to_string(j) +
                        ": negative flow on strategy " + std::to_string(p));
        }
        class_total += value;
      }
      total += class_total;
      double class_demand = instance.classes(i)[j].demand;
      if (!tol.Equal(class_total, class_demand)) {
        out.push_back(where + " class " + std::to_string(j) + ": routes " +
                      std::to_string(class_total) + " of demand " +
                      std::to_string(class_demand));
      }
    }
    if (!tol.Equal(total, instance.demand(i))) {
      out.push_back(where + ": routes " + std::to_string(total) +
                    " of demand " + std::to_string(instance.demand(i)));
    }
  }
  return out;
}

}  // namespace wardrop
