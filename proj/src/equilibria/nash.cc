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

#include "wardrop/equilibria/nash.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wardrop/core/errors.h"

namespace wardrop {
namespace {

// Relative spread at which path shifting stops.
constexpr double kSpreadTolerance = 1e-12;
constexpr double kSpreadFloor = 1e-15;

using PathFlows = std::vector<std::vector<double>>;

double PathCost(std::span<const ResourceCost> costs, std::span<const int> path,
                const std::vector<double>& loads) {
  double total = 0.0;
  for (int e : path) total += costs[e](loads[e]);
  return total;
}

std::vector<double> LoadsOf(const GameInstance& instance,
                            const PathFlows& flows) {
  std::vector<double> loads(instance.num_resources(), 0.0);
  for (int i = 0; i < instance.num_commodities(); ++i) {
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      if (flows[i][p] == 0.0) continue;
      for (int e : instance.Strategy(i, p)) loads[e] += flows[i][p];
    }
  }
  return loads;
}

// Largest used-path cost minus the minimum, relative to the minimum, over
// all commodities.
double MaxSpread(const GameInstance& instance,
                 std::span<const ResourceCost> costs, const PathFlows& flows,
                 const std::vector<double>& loads) {
  double worst = 0.0;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    double lowest = std::numeric_limits<double>::infinity();
    double highest_used = -std::numeric_limits<double>::infinity();
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      double c = PathCost(costs, instance.Strategy(i, p), loads);
      lowest = std::min(lowest, c);
      if (flows[i][p] > 0.0) highest_used = std::max(highest_used, c);
    }
    if (highest_used == -std::numeric_limits<double>::infinity()) continue;
    double spread = (highest_used - lowest) /
                    std::max(std::abs(lowest), kSpreadFloor / kSpreadTolerance);
    worst = std::max(worst, spread);
  }
  return worst;
}

NashResult ParallelExact(const GameInstance& instance,
                         std::span<const ResourceCost> costs) {
  std::vector<ResourceCost> strategy_costs;
  for (int p = 0; p < instance.num_strategies(0); ++p) {
    strategy_costs.push_back(costs[instance.Strategy(0, p)[0]]);
  }
  PathFlows flows = {ParallelLevelSplit(strategy_costs, instance.demand(0))};
  NashResult result;
  result.relative_gap = RelativeGap(instance, costs, flows);
  result.flow = Flow::FromPathFlows(instance, flows);
  result.iterations = 1;
  result.method = NashMethod::kParallelExact;
  return result;
}

NashResult PairwiseShifts(const GameInstance& instance,
                          std::span<const ResourceCost> costs,
                          const NashOptions& options) {
  PathFlows flows(instance.num_commodities());
  for (int i = 0; i < instance.num_commodities(); ++i) {
    int n = instance.num_strategies(i);
    if (n == 0) throw InputError("commodity without strategies");
    flows[i].assign(n, instance.demand(i) / n);
  }
  std::vector<int> plus;
  std::vector<int> minus;
  long iteration = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    std::vector<double> loads = LoadsOf(instance, flows);
    if (MaxSpread(instance, costs, flows, loads) <= kSpreadTolerance) break;
    bool moved = false;
    for (int i = 0; i < instance.num_commodities(); ++i) {
      const int n = instance.num_strategies(i);
      int best = 0;
      double best_cost = std::numeric_limits<double>::infinity();
      for (int p = 0; p < n; ++p) {
        double c = PathCost(costs, instance.Strategy(i, p), loads);
        if (c < best_cost) {
          best_cost = c;
          best = p;
        }
      }
      std::span<const int> target = instance.Strategy(i, best);
      for (int p = 0; p < n; ++p) {
        if (p == best || flows[i][p] <= 0.0) continue;
        std::span<const int> source = instance.Strategy(i, p);
        plus.clear();
        minus.clear();
        for (int e : target) {
          if (std::find(source.begin(), source.end(), e) == source.end())
            plus.push_back(e);
        }
        for (int e : source) {
          if (std::find(target.begin(), target.end(), e) == target.end())
            minus.push_back(e);
        }
        // Derivative of the potential along the shift of t units.
        auto slope = [&](double t) {
          double value = 0.0;
          for (int e : plus) value += costs[e](loads[e] + t);
          for (int e : minus) value -= costs[e](std::max(loads[e] - t, 0.0));
          return value;
        };
        if (slope(0.0) >= 0.0) continue;
        double amount = flows[i][p];
        double t = amount;
        if (slope(amount) > 0.0) {
          double lo = 0.0;
          double hi = amount;
          for (int iter = 0; iter < 200; ++iter) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (slope(mid) > 0.0 ? hi : lo) = mid;
          }
          t = lo;
        }
        if (t <= 0.0) continue;
        moved = true;
        if (t == amount) {
          flows[i][p] = 0.0;
        } else {
          flows[i][p] -= t;
        }
        flows[i][best] += t;
        for (int e : plus) loads[e] += t;
        for (int e : minus) loads[e] = std::max(loads[e] - t, 0.0);
      }
    }
    if (!moved) break;
  }
  NashResult result;
  result.relative_gap = RelativeGap(instance, costs, flows);
  result.iterations = iteration;
  result.method = NashMethod::kFrankWolfe;
  if (!(result.relative_gap <= options.gap_tolerance)) {
    throw ConvergenceError("Nash solver stopped after " +
                               std::to_string(iteration) +
                               " sweeps with relative gap " +
                               std::to_string(result.relative_gap),
                           result.relative_gap);
  }
  result.flow = Flow::FromPathFlows(instance, flows);
  return result;
}

}  // namespace

const char* NashMethodName(NashMethod method) {
  switch (method) {
    case NashMethod::kAuto:
      return "auto";
    case NashMethod::kParallelExact:
      return "parallel-exact";
    case NashMethod::kFrankWolfe:
      return "frank-wolfe";
  }
  return "unknown";
}

bool IsParallelLinks(const GameInstance& instance) {
  for (int i = 0; i < instance.num_commodities(); ++i) {
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      if (instance.RawStrategy(i, p).size() != 1) return false;
    }
  }
  return true;
}

std::vector<ResourceCost> LatencyCosts(const GameInstance& instance) {
  std::vector<ResourceCost> costs;
  costs.reserve(instance.num_resources());
  for (const Resource& resource : instance.resources()) {
    costs.emplace_back(resource.latency);
  }
  return costs;
}

std::vector<double> ParallelLevelSplit(std::span<const ResourceCost> costs,
                                       double demand, double* level) {
  const size_t n = costs.size();
  std::vector<double> split(n, 0.0);
  if (n == 0) throw InputError("no strategies to split demand over");
  auto at_most = [&](double l) {
    std::vector<double> x(n);
    for (size_t p = 0; p < n; ++p) x[p] = costs[p].MaxLoadAtMost(l, demand);
    return x;
  };
  auto below = [&](double l) {
    std::vector<double> x(n);
    for (size_t p = 0; p < n; ++p) x[p] = costs[p].MaxLoadBelow(l, demand);
    return x;
  };
  auto sum = [](const std::vector<double>& x) {
    double total = 0.0;
    for (double v : x) total += v;
    return total;
  };
  if (demand <= 0.0) {
    if (level != nullptr) {
      double lowest = std::numeric_limits<double>::infinity();
      for (const ResourceCost& c : costs) lowest = std::min(lowest, c(0.0));
      *level = lowest;
    }
    return split;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const ResourceCost& c : costs) {
    lo = std::min(lo, c(0.0));
    hi = std::max(hi, c(demand));
  }
  std::vector<double> base;
  std::vector<double> cap;
  if (sum(at_most(lo)) >= demand) {
    hi = lo;
    base.assign(n, 0.0);
    cap = at_most(lo);
  } else {
    // Invariant: sum(at_most(lo)) < demand <= sum(at_most(hi)).
    for (int iter = 0; iter < 400; ++iter) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (sum(at_most(mid)) >= demand ? hi : lo) = mid;
    }
    cap = at_most(hi);
    base = below(hi);
    if (sum(base) > demand) base = at_most(lo);
  }
  double remaining = demand - sum(base);
  for (size_t p = 0; p < n; ++p) {
    double extra = std::clamp(cap[p] - base[p], 0.0, std::max(remaining, 0.0));
    split[p] = base[p] + extra;
    remaining -= extra;
  }
  if (level != nullptr) *level = hi;
  return split;
}

double RelativeGap(const GameInstance& instance,
                   std::span<const ResourceCost> costs,
                   const std::vector<std::vector<double>>& path_flows) {
  std::vector<double> loads = LoadsOf(instance, path_flows);
  double total = 0.0;
  double reference = 0.0;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    double lowest = std::numeric_limits<double>::infinity();
    double routed = 0.0;
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      double c = PathCost(costs, instance.Strategy(i, p), loads);
      lowest = std::min(lowest, c);
      total += path_flows[i][p] * c;
      routed += path_flows[i][p];
    }
    reference += routed * lowest;
  }
  double gap = total - reference;
  if (gap <= 0.0) return 0.0;
  return gap / std::max(reference, std::numeric_limits<double>::min());
}

double RelativeGap(const GameInstance& instance, const Flow& flow) {
  std::vector<ResourceCost> costs = LatencyCosts(instance);
  return RelativeGap(instance, costs, flow.path_flows());
}

NashResult SolveNashWithCosts(const GameInstance& instance,
                              std::span<const ResourceCost> costs,
                              const NashOptions& options) {
  if (static_cast<int>(costs.size()) != instance.num_resources()) {
    throw InputError("one cost per resource required");
  }
  for (int i = 0; i < instance.num_commodities(); ++i) {
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      instance.Strategy(i, p);  // Throws on undeclared resources.
    }
  }
  const bool parallel =
      instance.num_commodities() == 1 && IsParallelLinks(instance);
  switch (options.method) {
    case NashMethod::kParallelExact:
      if (!parallel) {
        throw PreconditionError(
            "exact level solver needs a single commodity on parallel links");
      }
      return ParallelExact(instance, costs);
    case NashMethod::kAuto:
      if (parallel) return ParallelExact(instance, costs);
      return PairwiseShifts(instance, costs, options);
    case NashMethod::kFrankWolfe:
      return PairwiseShifts(instance, costs, options);
  }
  return PairwiseShifts(instance, costs, options);
}

NashResult SolveNash(const GameInstance& instance, const NashOptions& options) {
  std::vector<ResourceCost> costs = LatencyCosts(instance);
  return SolveNashWithCosts(instance, costs, options);
}

Flow ComputeNashFlow(const GameInstance& instance, const NashOptions& options) {
  return SolveNash(instance, options).flow;
}

Flow ComputeHomogeneousDeviatedFlow(const GameInstance& instance,
                                    const DeviationProfile& deviations,
                                    double gamma, const NashOptions& options) {
  if (!deviations.edge_induced()) {
    throw PreconditionError("solving needs edge-induced deviations");
  }
  if (static_cast<int>(deviations.edges().size()) != instance.num_resources()) {
    throw InputError("edge deviations do not cover every resource");
  }
  std::vector<ResourceCost> costs;
  for (int e = 0; e < instance.num_resources(); ++e) {
    costs.push_back(ResourceCost::Deviated(instance.latency(e),
                                           deviations.edges()[e], gamma));
  }
  return SolveNashWithCosts(instance, costs, options).flow;
}

}  // namespace wardrop
