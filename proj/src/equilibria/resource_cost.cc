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

#include "wardrop/equilibria/resource_cost.h"

#include <algorithm>

namespace wardrop {

ResourceCost ResourceCost::Deviated(const LatencyFn& latency,
                                    const EdgeDeviation& deviation,
                                    double gamma) {
  if (deviation.kind() == EdgeDeviationKind::kScaled) {
    ResourceCost cost;
    cost.terms_.emplace_back(1.0 + gamma * deviation.fraction(), latency);
    return cost;
  }
  ResourceCost cost(latency);
  if (gamma != 0.0) cost.terms_.emplace_back(gamma, deviation.function());
  return cost;
}

ResourceCost ResourceCost::Plus(double weight, LatencyFn fn) const {
  ResourceCost out = *this;
  out.terms_.emplace_back(weight, std::move(fn));
  return out;
}

ResourceCost ResourceCost::Shifted(double offset) const {
  ResourceCost out = *this;
  out.offset_ += offset;
  return out;
}

double ResourceCost::operator()(double load) const {
  double x = offset_ + load;
  double total = 0.0;
  for (const auto& [weight, fn] : terms_) total += weight * fn(x);
  return total;
}

double ResourceCost::Integral(double load) const {
  double total = 0.0;
  for (const auto& [weight, fn] : terms_) {
    total += weight * (fn.Integral(offset_ + load) - fn.Integral(offset_));
  }
  return total;
}

double ResourceCost::MaxLoadAtMost(double level, double cap) const {
  return Inverse(level, cap, /*strict=*/false);
}

double ResourceCost::MaxLoadBelow(double level, double cap) const {
  return Inverse(level, cap, /*strict=*/true);
}

double ResourceCost::Inverse(double level, double cap, bool strict) const {
  auto inside = [&](double x) {
    double value = (*this)(x);
    return strict ? value < level : value <= level;
  };
  if (!inside(0.0)) return 0.0;
  if (terms_.size() == 1 && terms_[0].first > 0.0) {
    const double weight = terms_[0].first;
    const LatencyFn& fn = terms_[0].second;
    double scaled = level / weight;
    double x = strict ? fn.MaxLoadBelow(scaled, offset_ + cap)
                      : fn.MaxLoadAtMost(scaled, offset_ + cap);
    return std::clamp(x - offset_, 0.0, cap);
  }
  if (inside(cap)) return cap;
  double lo = 0.0;
  double hi = cap;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace wardrop
