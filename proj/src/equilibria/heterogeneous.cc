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

#include "wardrop/equilibria/heterogeneous.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "wardrop/core/errors.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/resource_cost.h"

namespace wardrop {
namespace {

struct ClassState {
  int commodity = 0;
  int cls = 0;
  double demand = 0.0;
  double gamma = 0.0;
  std::vector<int> resource;  // Resource of each strategy.
  std::vector<double> flow;   // Per strategy.
};

}  // namespace

Flow HeterogeneousParallelEquilibrium(const GameInstance& instance,
                                      const DeviationProfile& deviations,
                                      const SensitivityProfile& gamma,
                                      const HeterogeneousOptions& options,
                                      const Tolerance& tol) {
  if (!IsParallelLinks(instance)) {
    throw PreconditionError("heterogeneous solver needs parallel links");
  }
  if (!deviations.edge_induced()) {
    throw PreconditionError("heterogeneous solver needs edge deviations");
  }
  if (static_cast<int>(deviations.edges().size()) != instance.num_resources()) {
    throw InputError("edge deviations do not cover every resource");
  }
  if (gamma.num_commodities() != instance.num_commodities()) {
    throw InputError("sensitivity profile does not match the instance");
  }
  std::vector<ClassState> classes;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    if (static_cast<int>(gamma.classes(i).size()) != instance.num_classes(i)) {
      throw InputError("sensitivity profile does not match the classes");
    }
    for (int j = 0; j < instance.num_classes(i); ++j) {
      ClassState state;
      state.commodity = i;
      state.cls = j;
      state.demand = gamma.classes(i)[j].demand;
      state.gamma = gamma.sensitivity(i, j);
      for (int p = 0; p < instance.num_strategies(i); ++p) {
        state.resource.push_back(instance.Strategy(i, p)[0]);
      }
      state.flow.assign(instance.num_strategies(i), 0.0);
      classes.push_back(std::move(state));
    }
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ClassState& a, const ClassState& b) {
                     return a.gamma > b.gamma;
                   });

  std::vector<double> loads(instance.num_resources(), 0.0);
  auto cost_of = [&](const ClassState& c, size_t p) {
    int e = c.resource[p];
    return ResourceCost::Deviated(instance.latency(e), deviations.edges()[e],
                                  c.gamma);
  };
  auto update = [&](ClassState& c, double weight) {
    std::vector<ResourceCost> residual;
    for (size_t p = 0; p < c.flow.size(); ++p) {
      residual.push_back(
          cost_of(c, p).Shifted(loads[c.resource[p]] - c.flow[p]));
    }
    std::vector<double> response = ParallelLevelSplit(residual, c.demand);
    for (size_t p = 0; p < c.flow.size(); ++p) {
      double next = weight == 1.0
                        ? response[p]
                        : (1.0 - weight) * c.flow[p] + weight * response[p];
      loads[c.resource[p]] += next - c.flow[p];
      c.flow[p] = next;
    }
  };
  auto regret = [&](const ClassState& c) {
    double lowest = std::numeric_limits<double>::infinity();
    double highest_used = 0.0;
    for (size_t p = 0; p < c.flow.size(); ++p) {
      double value = cost_of(c, p)(loads[c.resource[p]]);
      lowest = std::min(lowest, value);
      if (c.flow[p] > tol.abs) highest_used = std::max(highest_used, value);
    }
    return std::max(0.0, highest_used - lowest) /
           std::max(lowest, std::numeric_limits<double>::min());
  };

  // Two classes each preferring the link the other one uses trade flow; link
  // loads, and with them all costs, stay put. Damped best responses alone
  // make this trade only slowly when the classes' costs differ slightly.
  auto exchange = [&] {
    const size_t links = loads.size();
    std::vector<std::vector<double>> costs;
    for (const ClassState& c : classes) {
      std::vector<double> row(links, 0.0);
      for (size_t p = 0; p < c.flow.size(); ++p) {
        row[p] = cost_of(c, p)(loads[c.resource[p]]);
      }
      costs.push_back(std::move(row));
    }
    for (size_t a = 0; a < classes.size(); ++a) {
      for (size_t b = 0; b < classes.size(); ++b) {
        ClassState& ca = classes[a];
        ClassState& cb = classes[b];
        if (a == b || ca.commodity != cb.commodity) continue;
        for (size_t p = 0; p < ca.flow.size(); ++p) {
          for (size_t q = 0; q < ca.flow.size(); ++q) {
            if (costs[a][p] < costs[a][q] && costs[b][q] < costs[b][p]) {
              double amount = std::min(ca.flow[q], cb.flow[p]);
              ca.flow[q] -= amount;
              ca.flow[p] += amount;
              cb.flow[p] -= amount;
              cb.flow[q] += amount;
            }
          }
        }
      }
    }
  };

  auto worst_regret = [&] {
    double worst = 0.0;
    for (const ClassState& c : classes) worst = std::max(worst, regret(c));
    return worst;
  };

  // Iterating to a fraction of the tolerance leaves room for the rounding of
  // the final check.
  const double target = 0.25 * tol.rel;
  for (ClassState& c : classes) update(c, 1.0);
  double worst = worst_regret();
  long round = 0;
  for (; round < options.max_rounds && worst > target; ++round) {
    for (ClassState& c : classes) update(c, options.damping);
    exchange();
    worst = worst_regret();
  }
  if (worst > tol.rel) {
    throw ConvergenceError("heterogeneous solver did not settle; regret " +
                               std::to_string(worst),
                           worst);
  }
  // An undamped round snaps classes onto their exact responses; it is kept
  // only when it does not increase the regret.
  std::vector<ClassState> settled = classes;
  std::vector<double> settled_loads = loads;
  for (ClassState& c : classes) update(c, 1.0);
  if (worst_regret() > worst) {
    classes = std::move(settled);
    loads = std::move(settled_loads);
  }

  Flow::ClassPathFlows values(instance.num_commodities());
  for (int i = 0; i < instance.num_commodities(); ++i) {
    values[i].resize(instance.num_classes(i));
  }
  for (const ClassState& c : classes) values[c.commodity][c.cls] = c.flow;
  return Flow(instance, std::move(values));
}

}  // namespace wardrop
