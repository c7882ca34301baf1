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

#ifndef WARDROP_EQUILIBRIA_RATIO_H_
#define WARDROP_EQUILIBRIA_RATIO_H_

#include <optional>

#include "wardrop/bounds/bound_value.h"
#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/tolerance.h"

namespace wardrop {

struct RatioReport {
  double tested_cost = 0.0;
  double reference_cost = 0.0;
  double ratio = 0.0;
  std::optional<BoundValue> bound;
};

// C(tested) / C(reference). Throws DegenerateInstanceError when the
// reference cost is not positive.
RatioReport EmpiricalRatio(const GameInstance& instance, const Flow& tested,
                           const Flow& reference,
                           std::optional<BoundValue> bound = std::nullopt,
                           const Tolerance& tol = {});

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_RATIO_H_
