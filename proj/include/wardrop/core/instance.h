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

#ifndef WARDROP_CORE_INSTANCE_H_
#define WARDROP_CORE_INSTANCE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wardrop/core/latency.h"
#include "wardrop/core/network.h"

namespace wardrop {

struct Resource {
  std::string id;
  LatencyFn latency;

  bool operator==(const Resource&) const = default;
};

// A sensitivity class of a commodity: its share of the demand and its
// sensitivity (a deviation weight, or an approximation factor when the
// profile is read as epsilons).
struct SensitivityClass {
  double demand = 0.0;
  double sensitivity = 0.0;

  bool operator==(const SensitivityClass&) const = default;
};

struct Commodity {
  double demand = 0.0;
  // Each strategy is a set of resource ids.
  std::vector<std::vector<std::string>> strategies;
  // Empty means a single class carrying the whole demand with sensitivity 1.
  std::vector<SensitivityClass> classes;

  bool operator==(const Commodity&) const = default;
};

// A nonatomic congestion game with explicitly enumerated strategies.
// Immutable; construction resolves resource ids but does not validate (see
// ValidateInstance). Unknown ids resolve to kUnknownResource.
class GameInstance {
 public:
  static constexpr int kUnknownResource = -1;

  GameInstance() = default;
  GameInstance(std::vector<Resource> resources,
               std::vector<Commodity> commodities,
               std::optional<NetworkAnnotation> graph = std::nullopt);

  const std::vector<Resource>& resources() const { return resources_; }
  const std::vector<Commodity>& commodities() const { return commodities_; }
  const std::optional<NetworkAnnotation>& graph() const { return graph_; }

  int num_resources() const { return static_cast<int>(resources_.size()); }
  int num_commodities() const { return static_cast<int>(commodities_.size()); }
  int num_strategies(int commodity) const;
  int num_classes(int commodity) const;
  double demand(int commodity) const { return commodities_[commodity].demand; }

  // Classes with the single-class default filled in.
  const std::vector<SensitivityClass>& classes(int commodity) const {
    return classes_[commodity];
  }

  const LatencyFn& latency(int resource) const {
    return resources_[resource].latency;
  }

  // Resolved resource indices of a strategy. Throws InputError when the
  // strategy references an undeclared resource.
  std::span<const int> Strategy(int commodity, int strategy) const;
  // Same, without the check; may contain kUnknownResource.
  std::span<const int> RawStrategy(int commodity, int strategy) const;

  // Index of a resource id, or kUnknownResource.
  int FindResource(std::string_view id) const;
  // Throws InputError for an unknown id.
  int RequireResource(std::string_view id) const;

  // Strategy index whose resource set equals `ids` (order-insensitive), or -1.
  int FindStrategy(int commodity, std::span<const std::string> ids) const;

  bool SingleCommodity() const { return commodities_.size() == 1; }

  bool operator==(const GameInstance& other) const;

 private:
  std::vector<Resource> resources_;
  std::vector<Commodity> commodities_;
  std::optional<NetworkAnnotation> graph_;

  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<std::vector<int>>> strategies_;
  std::vector<std::vector<SensitivityClass>> classes_;
};

}  // namespace wardrop

#endif  // WARDROP_CORE_INSTANCE_H_
