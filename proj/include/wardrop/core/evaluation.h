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

#ifndef WARDROP_CORE_EVALUATION_H_
#define WARDROP_CORE_EVALUATION_H_

#include <span>
#include <string>
#include <vector>

#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/tolerance.h"

namespace wardrop {

// Sum of l_e(f_e) over the resources named in `path`, at total loads.
// Throws InputError for an unknown resource id.
double PathLatency(const GameInstance& instance, const Flow& flow,
                   std::span<const std::string> path);

double StrategyLatency(const GameInstance& instance, const Flow& flow,
                       int commodity, int strategy);

// l_e(f_e) for every resource.
std::vector<double> ResourceLatencies(const GameInstance& instance,
                                      const Flow& flow);

// sum_e f_e l_e(f_e). Throws InvariantError when the flow is infeasible.
double SocialCost(const GameInstance& instance, const Flow& flow,
                  const Tolerance& tol = {});

// sum_i sum_P f_P l_P(f), no feasibility check.
double PathwiseSocialCost(const GameInstance& instance, const Flow& flow);

// sum_e integral_0^{f_e} l_e(u) du.
double BeckmannPotential(const GameInstance& instance, const Flow& flow);
double BeckmannPotential(const GameInstance& instance,
                         std::span<const double> loads);

struct Violation {
  std::string location;
  std::string message;
};

// Every violated requirement of the instance: latency shape, demand signs,
// strategy contents and distinctness, class totals, and graph consistency
// when a graph is attached. Empty iff the instance is well formed.
std::vector<Violation> ValidateInstance(const GameInstance& instance,
                                        const Tolerance& tol = {});

// Throws InputError carrying the first few violations, if any.
void RequireValidInstance(const GameInstance& instance,
                          const Tolerance& tol = {});

}  // namespace wardrop

#endif  // WARDROP_CORE_EVALUATION_H_
