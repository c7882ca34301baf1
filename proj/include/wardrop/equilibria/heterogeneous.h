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

#ifndef WARDROP_EQUILIBRIA_HETEROGENEOUS_H_
#define WARDROP_EQUILIBRIA_HETEROGENEOUS_H_

#include "wardrop/core/deviation.h"
#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/sensitivity.h"
#include "wardrop/core/tolerance.h"

namespace wardrop {

struct HeterogeneousOptions {
  double damping = 0.5;
  long max_rounds = 100000;
};

// Deviated equilibrium of a heterogeneous population on parallel links.
// Classes are visited in order of decreasing sensitivity; each replaces its
// flow by a damped mix of its current flow and its exact best response
// against the others' loads, after which pairs of classes that each prefer
// a link the other uses trade that flow. Rounds stop once every class's
// relative regret is at most tol.rel / 4; a final undamped round is kept
// when it does not raise the regret. Throws PreconditionError unless every
// strategy is a single resource and the deviations are edge induced;
// ConvergenceError (carrying the regret) when the regret still exceeds
// tol.rel after max_rounds.
Flow HeterogeneousParallelEquilibrium(const GameInstance& instance,
                                      const DeviationProfile& deviations,
                                      const SensitivityProfile& gamma,
                                      const HeterogeneousOptions& options = {},
                                      const Tolerance& tol = {});

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_HETEROGENEOUS_H_
