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

#ifndef WARDROP_EQUILIBRIA_RESOURCE_COST_H_
#define WARDROP_EQUILIBRIA_RESOURCE_COST_H_

#include <utility>
#include <vector>

#include "wardrop/core/deviation.h"
#include "wardrop/core/latency.h"

namespace wardrop {

// A non-decreasing cost c(x) = sum_k w_k g_k(offset + x) built from latency
// functions; expresses l_e + gamma delta_e and the residual cost seen by one
// class when the rest of the load is held fixed.
class ResourceCost {
 public:
  ResourceCost() = default;
  explicit ResourceCost(LatencyFn fn) { terms_.emplace_back(1.0, std::move(fn)); }

  // l + gamma * delta for a resource with latency l and edge deviation d.
  static ResourceCost Deviated(const LatencyFn& latency,
                               const EdgeDeviation& deviation, double gamma);

  ResourceCost Plus(double weight, LatencyFn fn) const;
  // x -> c(offset + x).
  ResourceCost Shifted(double offset) const;

  double operator()(double load) const;
  // Integral of c over [0, load] (ignores the offset origin: integrates
  // from offset to offset + load).
  double Integral(double load) const;

  // sup{x in [0, cap] : c(x) <= level} and sup{x in [0, cap] : c(x) < level},
  // 0 when empty.
  double MaxLoadAtMost(double level, double cap) const;
  double MaxLoadBelow(double level, double cap) const;

 private:
  double Inverse(double level, double cap, bool strict) const;

  std::vector<std::pair<double, LatencyFn>> terms_;
  double offset_ = 0.0;
};

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_RESOURCE_COST_H_
