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

#ifndef WARDROP_CORE_DEVIATION_H_
#define WARDROP_CORE_DEVIATION_H_

#include <string>
#include <vector>

#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/latency.h"
#include "wardrop/core/tolerance.h"

namespace wardrop {

enum class EdgeDeviationKind {
  kScaled,    // delta_e(x) = fraction * l_e(x)
  kFunction,  // delta_e(x) = d(x) for a latency-shaped function d
};

// Deviation function of a single resource. Both kinds are non-decreasing
// whenever the underlying latency functions are.
class EdgeDeviation {
 public:
  EdgeDeviation() = default;

  static EdgeDeviation Scaled(double fraction);
  static EdgeDeviation Function(LatencyFn fn);

  EdgeDeviationKind kind() const { return kind_; }
  double fraction() const { return fraction_; }
  const LatencyFn& function() const { return fn_; }

  double operator()(const LatencyFn& latency, double load) const;

  bool operator==(const EdgeDeviation&) const = default;

 private:
  EdgeDeviationKind kind_ = EdgeDeviationKind::kScaled;
  double fraction_ = 0.0;
  LatencyFn fn_;
};

// Path deviations delta_P together with their bound beta. Either explicit
// values at one flow, or induced by summing edge deviations along the path.
class DeviationProfile {
 public:
  DeviationProfile() = default;

  // values[i][p]: deviation of strategy p of commodity i at the inspected
  // flow.
  static DeviationProfile Explicit(double beta,
                                   std::vector<std::vector<double>> values);
  // edges[e]: deviation function of resource e.
  static DeviationProfile EdgeInduced(double beta,
                                      std::vector<EdgeDeviation> edges);
  // delta = 0 everywhere.
  static DeviationProfile Zero(const GameInstance& instance, double beta = 0.0);

  double beta() const { return beta_; }
  bool edge_induced() const { return edge_induced_; }
  const std::vector<std::vector<double>>& explicit_values() const {
    return values_;
  }
  const std::vector<EdgeDeviation>& edges() const { return edges_; }

  double EdgeValue(const GameInstance& instance, int resource,
                   double load) const;
  double PathDeviation(const GameInstance& instance, const Flow& flow,
                       int commodity, int strategy) const;

  // Membership in Delta(beta): 0 <= delta_P(f) <= beta * l_P(f) for every
  // strategy at `flow`, and for edge-induced profiles additionally
  // 0 <= delta_e(x) <= beta * l_e(x) on sampled loads. Each entry names the
  // offending path or resource.
  std::vector<std::string> MembershipViolations(const GameInstance& instance,
                                                const Flow& flow,
                                                const Tolerance& tol = {}) const;

  bool operator==(const DeviationProfile&) const = default;

 private:
  double beta_ = 0.0;
  bool edge_induced_ = false;
  std::vector<std::vector<double>> values_;
  std::vector<EdgeDeviation> edges_;
};

}  // namespace wardrop

#endif  // WARDROP_CORE_DEVIATION_H_
