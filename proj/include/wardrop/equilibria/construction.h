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

#ifndef WARDROP_EQUILIBRIA_CONSTRUCTION_H_
#define WARDROP_EQUILIBRIA_CONSTRUCTION_H_

#include <optional>
#include <string>

#include "wardrop/bounds/bound_value.h"
#include "wardrop/core/deviation.h"
#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/sensitivity.h"

namespace wardrop {

// An instance together with a tested flow and a reference Nash flow whose
// cost ratio is known in closed form.
struct Construction {
  std::string family;
  GameInstance instance;
  Flow tested;
  Flow reference;
  // Per-class eps for which `tested` is an approximate equilibrium.
  std::optional<SensitivityProfile> eps;
  // Set when `tested` is a deviated equilibrium for these deviations and the
  // instance's class sensitivities.
  std::optional<DeviationProfile> deviations;
  BoundValue bound;
  double expected_ratio = 1.0;
};

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_CONSTRUCTION_H_
