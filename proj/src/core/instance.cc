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

#include "wardrop/core/instance.h"

#include <algorithm>
#include <utility>

#include "wardrop/core/errors.h"

namespace wardrop {

GameInstance::GameInstance(std::vector<Resource> resources,
                           std::vector<Commodity> commodities,
                           std::optional<NetworkAnnotation> graph)
    : resources_(std::move(resources)),
      commodities_(std::move(commodities)),
      graph_(std::move(graph)) {
  for (int e = 0; e < num_resources(); ++e) {
    index_.emplace(resources_[e].id, e);  // First declaration wins.
  }
  strategies_.resize(commodities_.size());
  classes_.resize(commodities_.size());
  for (size_t i = 0; i < commodities_.size(); ++i) {
    const Commodity& commodity = commodities_[i];
    for (const auto& ids : commodity.strategies) {
      std::vector<int> resolved;
      resolved.reserve(ids.size());
      for (const std::string& id : ids) resolved.push_back(FindResource(id));
      strategies_[i].push_back(std::move(resolved));
    }
    if (commodity.classes.empty()) {
      classes_[i] = {{commodity.demand, 1.0}};
    } else {
      classes_[i] = commodity.classes;
    }
  }
}

int GameInstance::num_strategies(int commodity) const {
  return static_cast<int>(strategies_[commodity].size());
}

int GameInstance::num_classes(int commodity) const {
  return static_cast<int>(classes_[commodity].size());
}

std::span<const int> GameInstance::RawStrategy(int commodity,
                                               int strategy) const {
  return strategies_[commodity][strategy];
}

std::span<const int> GameInstance::Strategy(int commodity,
                                            int strategy) const {
  std::span<const int> resolved = RawStrategy(commodity, strategy);
  for (size_t k = 0; k < resolved.size(); ++k) {
    if (resolved[k] == kUnknownResource) {
      throw InputError("strategy " + std::to_string(strategy) +
                       " of commodity " + std::to_string(commodity) +
                       " references undeclared resource '" +
                       commodities_[commodity].strategies[strategy][k] + "'");
    }
  }
  return resolved;
}

int GameInstance::FindResource(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? kUnknownResource : it->second;
}

int GameInstance::RequireResource(std::string_view id) const {
  int e = FindResource(id);
  if (e == kUnknownResource) {
    throw InputError("unknown resource id '" + std::string(id) + "'");
  }
  return e;
}

int GameInstance::FindStrategy(int commodity,
                               std::span<const std::string> ids) const {
  std::vector<std::string> wanted(ids.begin(), ids.end());
  std::sort(wanted.begin(), wanted.end());
  const auto& strategies = commodities_[commodity].strategies;
  for (size_t p = 0; p < strategies.size(); ++p) {
    std::vector<std::string> have = strategies[p];
    std::sort(have.begin(), have.end());
    if (have == wanted) return static_cast<int>(p);
  }
  return -1;
}

bool GameInstance::operator==(const GameInstance& other) const {
  return resources_ == other.resources_ &&
         commodities_ == other.commodities_ && graph_ == other.graph_;
}

}  // namespace wardrop
