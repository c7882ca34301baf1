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

#include "wardrop/equilibria/ratio.h"

#include <utility>

#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"

namespace wardrop {

RatioReport EmpiricalRatio(const GameInstance& instance, const Flow& tested,
                           const Flow& reference,
                           std::optional<BoundValue> bound,
                           const Tolerance& tol) {
  RatioReport report;
  report.reference_cost = SocialCost(instance, reference, tol);
  if (!(report.reference_cost > 0.0)) {
    throw DegenerateInstanceError("reference flow has zero social cost");
  }
  report.tested_cost = SocialCost(instance, tested, tol);
  report.ratio = report.tested_cost / report.reference_cost;
  report.bound = std::move(bound);
  return report;
}

}  // namespace wardrop
