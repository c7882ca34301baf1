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

#include "wardrop/equilibria/search.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wardrop/core/errors.h"
#include "wardrop/equilibria/certificate.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/verify.h"

namespace wardrop {
namespace {

struct GridClass {
  int commodity = 0;
  int cls = 0;
  double unit = 0.0;
  double eps = 0.0;
  int units = 1;
  std::vector<std::vector<int>> compositions;   // Lexicographic.
  std::vector<std::vector<double>> loads;       // Per composition.
};

double Binomial(int n, int k) {
  double value = 1.0;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

void Compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    current.push_back(first);
    Compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

SearchResult WorstApproxSearch(const GameInstance& instance,
                               const SensitivityProfile& eps,
                               const SearchOptions& options,
                               const Tolerance& tol) {
  if (options.grid < 2) {
    throw InputError("grid needs at least 2 points per unit demand");
  }
  if (eps.num_commodities() != instance.num_commodities()) {
    throw InputError("eps profile does not match the instance");
  }
  int variables = 0;
  double points = 1.0;
  std::vector<GridClass> classes;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    const int n = instance.num_strategies(i);
    if (static_cast<int>(eps.classes(i).size()) != instance.num_classes(i)) {
      throw InputError("eps profile does not match the instance's classes");
    }
    for (int j = 0; j < instance.num_classes(i); ++j) {
      variables += n;
      double demand = instance.classes(i)[j].demand;
      int units = std::max(1, static_cast<int>(std::lround(demand * options.grid)));
      points *= Binomial(units + n - 1, n - 1);
      GridClass grid_class;
      grid_class.commodity = i;
      grid_class.cls = j;
      grid_class.unit = demand / units;
      grid_class.eps = eps.sensitivity(i, j);
      grid_class.units = units;
      classes.push_back(std::move(grid_class));
    }
  }
  if (variables > kMaxSearchVariables) {
    throw RefusalError("grid search supports at most " +
                       std::to_string(kMaxSearchVariables) +
                       " strategy-class variables, got " +
                       std::to_string(variables));
  }
  if (points > static_cast<double>(options.max_points)) {
    throw RefusalError("grid search would visit " + std::to_string(points) +
                       " flows");
  }
  const int num_resources = instance.num_resources();
  for (GridClass& c : classes) {
    std::vector<int> current;
    Compositions(c.units, instance.num_strategies(c.commodity), current,
                 c.compositions);
    for (const std::vector<int>& counts : c.compositions) {
      std::vector<double> loads(num_resources, 0.0);
      for (size_t p = 0; p < counts.size(); ++p) {
        if (counts[p] == 0) continue;
        for (int e : instance.Strategy(c.commodity, static_cast<int>(p))) {
          loads[e] += counts[p] * c.unit;
        }
      }
      c.loads.push_back(std::move(loads));
    }
  }

  SearchResult result;
  std::vector<size_t> index(classes.size(), 0);
  std::vector<size_t> best_index;
  double best_cost = -1.0;
  std::vector<double> loads(num_resources);
  std::vector<double> latency(num_resources);
  std::vector<std::vector<double>> path_latency(instance.num_commodities());
  while (true) {
    std::fill(loads.begin(), loads.end(), 0.0);
    for (size_t c = 0; c < classes.size(); ++c) {
      const std::vector<double>& add = classes[c].loads[index[c]];
      for (int e = 0; e < num_resources; ++e) loads[e] += add[e];
    }
    double cost = 0.0;
    for (int e = 0; e < num_resources; ++e) {
      latency[e] = instance.latency(e)(loads[e]);
      cost += loads[e] * latency[e];
    }
    for (int i = 0; i < instance.num_commodities(); ++i) {
      path_latency[i].assign(instance.num_strategies(i), 0.0);
      for (int p = 0; p < instance.num_strategies(i); ++p) {
        for (int e : instance.Strategy(i, p)) path_latency[i][p] += latency[e];
      }
    }
    bool ok = true;
    for (size_t c = 0; c < classes.size() && ok; ++c) {
      const GridClass& g = classes[c];
      const std::vector<double>& lat = path_latency[g.commodity];
      double rhs = (1.0 + g.eps) * *std::min_element(lat.begin(), lat.end());
      const std::vector<int>& counts = g.compositions[index[c]];
      for (size_t p = 0; p < counts.size(); ++p) {
        if (!(counts[p] * g.unit > tol.abs)) continue;
        if (ConditionSlack(lat[p], rhs, tol) < -tol.abs) {
          ok = false;
          break;
        }
      }
    }
    ++result.visited;
    if (ok) {
      ++result.accepted;
      if (cost > best_cost) {
        best_cost = cost;
        best_index = index;
      }
    }
    // Odometer; the last class varies fastest.
    size_t c = classes.size();
    while (c > 0) {
      --c;
      if (++index[c] < classes[c].compositions.size()) break;
      index[c] = 0;
      if (c == 0) {
        c = classes.size() + 1;
        break;
      }
    }
    if (c == classes.size() + 1 || classes.empty()) break;
  }
  if (best_index.empty()) {
    throw PreconditionError("no grid flow is eps-approximate; refine the grid");
  }
  Flow::ClassPathFlows values(instance.num_commodities());
  for (int i = 0; i < instance.num_commodities(); ++i) {
    values[i].resize(instance.num_classes(i));
  }
  for (size_t c = 0; c < classes.size(); ++c) {
    const GridClass& g = classes[c];
    std::vector<double> row;
    for (int count : g.compositions[best_index[c]]) row.push_back(count * g.unit);
    values[g.commodity][g.cls] = std::move(row);
  }
  result.flow = Flow(instance, std::move(values));
  if (!VerifyApproxNash(instance, result.flow, eps, tol).pass) {
    throw InvariantError("grid maximizer fails approximate verification");
  }
  Flow nash = ComputeNashFlow(instance);
  result.report = EmpiricalRatio(instance, result.flow, nash, std::nullopt, tol);
  return result;
}

}  // namespace wardrop
