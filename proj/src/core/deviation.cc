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

#include "wardrop/core/deviation.h"

#include <algorithm>
#include <utility>

#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"

namespace wardrop {
namespace {

std::string PathName(const GameInstance& instance, int commodity,
                     int strategy) {
  std::string name = "commodity " + std::to_string(commodity) + " path {";
  const auto& ids = instance.commodities()[commodity].strategies[strategy];
  for (size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) name += ",";
    name += ids[k];
  }
  return name + "}";
}

constexpr int kSampleCount = 64;

}  // namespace

EdgeDeviation EdgeDeviation::Scaled(double fraction) {
  EdgeDeviation d;
  d.kind_ = EdgeDeviationKind::kScaled;
  d.fraction_ = fraction;
  return d;
}

EdgeDeviation EdgeDeviation::Function(LatencyFn fn) {
  EdgeDeviation d;
  d.kind_ = EdgeDeviationKind::kFunction;
  d.fn_ = std::move(fn);
  return d;
}

double EdgeDeviation::operator()(const LatencyFn& latency, double load) const {
  return kind_ == EdgeDeviationKind::kScaled ? fraction_ * latency(load)
                                             : fn_(load);
}

DeviationProfile DeviationProfile::Explicit(
    double beta, std::vector<std::vector<double>> values) {
  DeviationProfile profile;
  profile.beta_ = beta;
  profile.edge_induced_ = false;
  profile.values_ = std::move(values);
  return profile;
}

DeviationProfile DeviationProfile::EdgeInduced(
    double beta, std::vector<EdgeDeviation> edges) {
  DeviationProfile profile;
  profile.beta_ = beta;
  profile.edge_induced_ = true;
  profile.edges_ = std::move(edges);
  return profile;
}

DeviationProfile DeviationProfile::Zero(const GameInstance& instance,
                                        double beta) {
  return EdgeInduced(beta, std::vector<EdgeDeviation>(
                               instance.num_resources(), EdgeDeviation()));
}

double DeviationProfile::EdgeValue(const GameInstance& instance, int resource,
                                   double load) const {
  return edges_.at(resource)(instance.latency(resource), load);
}

double DeviationProfile::PathDeviation(const GameInstance& instance,
                                       const Flow& flow, int commodity,
                                       int strategy) const {
  if (!edge_induced_) return values_.at(commodity).at(strategy);
  double total = 0.0;
  for (int e : instance.Strategy(commodity, strategy)) {
    total += EdgeValue(instance, e, flow.Load(e));
  }
  return total;
}

std::vector<std::string> DeviationProfile::MembershipViolations(
    const GameInstance& instance, const Flow& flow,
    const Tolerance& tol) const {
  std::vector<std::string> out;
  if (beta_ < 0.0) out.push_back("beta must be nonnegative");
  if (edge_induced_) {
    if (static_cast<int>(edges_.size()) != instance.num_resources()) {
      out.push_back("edge deviations do not cover every resource");
      return out;
    }
    double max_demand = 0.0;
    for (int i = 0; i < instance.num_commodities(); ++i) {
      max_demand += instance.demand(i);
    }
    for (int e = 0; e < instance.num_resources(); ++e) {
      std::vector<double> loads = {flow.Load(e)};
      for (int k = 0; k <= kSampleCount; ++k) {
        loads.push_back(2.0 * max_demand * k / kSampleCount);
      }
      for (double x : loads) {
        double delta = EdgeValue(instance, e, x);
        double bound = beta_ * instance.latency(e)(x);
        if (delta < -tol.abs || !tol.LessOrEqual(delta, bound)) {
          out.push_back("resource " + instance.resources()[e].id +
                        ": edge deviation " + std::to_string(delta) +
                        " outside [0, " + std::to_string(bound) +
                        "] at load " + std::to_string(x));
          break;
        }
      }
    }
  } else {
    if (static_cast<int>(values_.size()) != instance.num_commodities()) {
      out.push_back("explicit deviations do not cover every commodity");
      return out;
    }
    for (int i = 0; i < instance.num_commodities(); ++i) {
      if (static_cast<int>(values_[i].size()) != instance.num_strategies(i)) {
        out.push_back("explicit deviations do not cover every strategy of "
                      "commodity " +
                      std::to_string(i));
        return out;
      }
    }
  }
  for (int i = 0; i < instance.num_commodities(); ++i) {
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      double delta = PathDeviation(instance, flow, i, p);
      double bound = beta_ * StrategyLatency(instance, flow, i, p);
      if (delta < -tol.abs || !tol.LessOrEqual(delta, bound)) {
        out.push_back(PathName(instance, i, p) + ": deviation " +
                      std::to_string(delta) + " outside [0, " +
                      std::to_string(bound) + "]");
      }
    }
  }
  return out;
}

}  // namespace wardrop
