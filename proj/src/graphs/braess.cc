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

#include "wardrop/graphs/braess.h"

#include <vector>

#include "wardrop/bounds/formulas.h"
#include "wardrop/core/errors.h"
#include "wardrop/graphs/paths.h"

namespace wardrop {
namespace {

std::string V(int j) { return "v" + std::to_string(j); }
std::string W(int j) { return "w" + std::to_string(j); }

// Flow putting `share` on each listed path (given as arc-id sets).
Flow PathFlow(const GameInstance& instance,
              const std::vector<std::vector<std::string>>& paths,
              double share) {
  std::vector<double> values(instance.num_strategies(0), 0.0);
  for (const auto& path : paths) {
    int p = instance.FindStrategy(0, path);
    if (p < 0) throw InvariantError("Braess path missing from enumeration");
    values[p] += share;
  }
  return Flow::FromPathFlows(instance, {values});
}

}  // namespace

std::string BraessArc(const std::string& tail, const std::string& head) {
  return tail + "-" + head;
}

void ValidateBraessParams(const BraessParams& params) {
  if (params.m < 2) throw InputError("Braess graphs need m >= 2");
  if (!(params.eps >= 0.0)) throw InputError("eps must be nonnegative");
  const double threshold = 1.0 / (params.m - 1);
  if (params.regime == BraessRegime::kSubcritical) {
    if (!(params.eps < threshold)) {
      throw InputError("subcritical regime needs eps < 1/(m-1) = " +
                       std::to_string(threshold));
    }
  } else {
    if (!(params.eps >= threshold)) {
      throw InputError("supercritical regime needs eps >= 1/(m-1) = " +
                       std::to_string(threshold));
    }
    if (!(params.tau >= 0.0)) throw InputError("tau must be nonnegative");
  }
}

NetworkAnnotation BuildBraessGraph(int m) {
  if (m < 2) throw InputError("Braess graphs need m >= 2");
  NetworkAnnotation graph;
  graph.source = "s";
  graph.sink = "t";
  graph.nodes.push_back("s");
  for (int j = 1; j < m; ++j) graph.nodes.push_back(V(j));
  for (int j = 1; j < m; ++j) graph.nodes.push_back(W(j));
  graph.nodes.push_back("t");
  auto add = [&](const std::string& tail, const std::string& head) {
    graph.arcs.push_back({BraessArc(tail, head), tail, head});
  };
  for (int j = 1; j < m; ++j) {
    add("s", V(j));
    add(V(j), W(j));
    add(W(j), "t");
  }
  for (int j = 2; j < m; ++j) add(V(j), W(j - 1));
  add(V(1), "t");
  add("s", W(m - 1));
  return graph;
}

Construction GenBraess(const BraessParams& params) {
  ValidateBraessParams(params);
  const int m = params.m;
  const double eps = params.eps;
  const bool sub = params.regime == BraessRegime::kSubcritical;
  const double top = sub ? eps / (1.0 - eps * (m - 1)) : params.tau;
  const double lo = 1.0 / m;
  const double hi = 1.0 / (m - 1);
  const double slope = top / (hi - lo);
  const double middle =
      sub ? 1.0 : (1.0 + eps) + ((m - 1) * eps - 1.0) * params.tau;
  auto ramp = [&](double factor) {
    return LatencyFn::PiecewiseLinear({{lo, 0.0}, {hi, factor * top}},
                                      factor * slope);
  };

  NetworkAnnotation graph = BuildBraessGraph(m);
  std::vector<LatencyFn> latencies;
  for (const Arc& arc : graph.arcs) {
    const std::string& a = arc.tail;
    const std::string& b = arc.head;
    if (a == "s" && b[0] == 'v') {
      int j = std::stoi(b.substr(1));
      latencies.push_back(ramp(m - j));
    } else if (a[0] == 'w' && b == "t") {
      int j = std::stoi(a.substr(1));
      latencies.push_back(ramp(j));
    } else if (a[0] == 'v' && b[0] == 'w' && a.substr(1) == b.substr(1)) {
      latencies.push_back(LatencyFn::Constant(middle));
    } else {
      latencies.push_back(LatencyFn::Constant(1.0));
    }
  }

  Construction out;
  out.family = sub ? "braess-sub" : "braess-super";
  out.instance = NetworkInstance(graph, latencies, 1.0);
  std::vector<std::vector<std::string>> direct;
  for (int j = 1; j < m; ++j) {
    direct.push_back(
        {BraessArc("s", V(j)), BraessArc(V(j), W(j)), BraessArc(W(j), "t")});
  }
  std::vector<std::vector<std::string>> cross;
  cross.push_back({BraessArc("s", V(1)), BraessArc(V(1), "t")});
  for (int j = 2; j < m; ++j) {
    cross.push_back({BraessArc("s", V(j)), BraessArc(V(j), W(j - 1)),
                     BraessArc(W(j - 1), "t")});
  }
  cross.push_back({BraessArc("s", W(m - 1)), BraessArc(W(m - 1), "t")});
  out.tested = PathFlow(out.instance, direct, 1.0 / (m - 1));
  out.reference = PathFlow(out.instance, cross, 1.0 / m);
  out.eps = SensitivityProfile({{{1.0, eps}}});
  out.bound = BraessSup(eps, 2 * m);
  out.expected_ratio = sub ? (1.0 + eps) / (1.0 - eps * (m - 1))
                           : (1.0 + eps) * (1.0 + (m - 1) * params.tau);
  return out;
}

Construction GenBraessSubcritical(int m, double eps) {
  return GenBraess({m, BraessRegime::kSubcritical, eps, 0.0});
}

Construction GenBraessSupercritical(int m, double eps, double tau) {
  return GenBraess({m, BraessRegime::kSupercritical, eps, tau});
}

}  // namespace wardrop
