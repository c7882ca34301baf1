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

#ifndef WARDROP_EQUILIBRIA_NASH_H_
#define WARDROP_EQUILIBRIA_NASH_H_

#include <span>
#include <vector>

#include "wardrop/core/deviation.h"
#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/tolerance.h"
#include "wardrop/equilibria/resource_cost.h"

namespace wardrop {

enum class NashMethod {
  kAuto,           // Level bisection on parallel links, else path shifting.
  kParallelExact,  // Common-level bisection; single-commodity parallel links.
  kFrankWolfe,     // Pairwise shifts towards the best path, exact line search.
};

const char* NashMethodName(NashMethod method);

struct NashOptions {
  NashMethod method = NashMethod::kAuto;
  long max_iterations = 100000;
  // Required relative gap at termination.
  double gap_tolerance = 1e-9;
};

struct NashResult {
  Flow flow;
  double relative_gap = 0.0;
  long iterations = 0;
  NashMethod method = NashMethod::kAuto;
};

// True when every strategy consists of exactly one resource.
bool IsParallelLinks(const GameInstance& instance);

// Wardrop flow of the instance's latencies. Demand is split over classes in
// proportion to class demand. Throws ConvergenceError carrying the final gap
// when the iteration cap is hit with a gap above the tolerance.
NashResult SolveNash(const GameInstance& instance,
                     const NashOptions& options = {});
// Same, for arbitrary per-resource costs (costs[e] replaces l_e).
NashResult SolveNashWithCosts(const GameInstance& instance,
                              std::span<const ResourceCost> costs,
                              const NashOptions& options = {});

Flow ComputeNashFlow(const GameInstance& instance,
                     const NashOptions& options = {});

// Nash flow with respect to l_e + gamma delta_e for a population whose
// every member has sensitivity `gamma`; a beta-deviated Nash flow.
Flow ComputeHomogeneousDeviatedFlow(const GameInstance& instance,
                                    const DeviationProfile& deviations,
                                    double gamma,
                                    const NashOptions& options = {});

// (sum_P f_P c_P - sum_i r_i min_P c_P) / sum_i r_i min_P c_P for the
// aggregate path flows.
double RelativeGap(const GameInstance& instance,
                   std::span<const ResourceCost> costs,
                   const std::vector<std::vector<double>>& path_flows);
double RelativeGap(const GameInstance& instance, const Flow& flow);

// Splits `demand` over parallel strategies with costs `costs` so that every
// used strategy sits at the common minimal level. Ties at the level fill
// strategies in index order. Returns the split; `level` receives the
// common cost.
std::vector<double> ParallelLevelSplit(std::span<const ResourceCost> costs,
                                       double demand, double* level = nullptr);

std::vector<ResourceCost> LatencyCosts(const GameInstance& instance);

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_NASH_H_
