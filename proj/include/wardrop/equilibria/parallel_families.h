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

#ifndef WARDROP_EQUILIBRIA_PARALLEL_FAMILIES_H_
#define WARDROP_EQUILIBRIA_PARALLEL_FAMILIES_H_

#include <optional>
#include <span>

#include "wardrop/equilibria/construction.h"

namespace wardrop {

// Two parallel arcs: arc1 with latency 1 and deviation beta, arc2 with a
// latency rising linearly from 1 + eps_prime at load 0 to 1 + beta gamma_j at
// load T = r_j + ... + r_h (slope 1 beyond) and no deviation. Classes below
// `j` (1-based, classes ordered by sensitivity) stay on arc1, the rest use
// arc2; the reference flow puts everything on arc1. Ratio
// 1 + beta gamma_j T / R. `eps_prime` defaults to 1e-6 beta gamma_j and must
// not exceed beta gamma_j. Throws InputError on invalid parameters.
Construction GenTwoArcDeviation(double beta, std::span<const double> r,
                                std::span<const double> gamma, int j,
                                std::optional<double> eps_prime = std::nullopt);

// The class index (1-based) maximizing gamma_j (r_j + ... + r_h).
int WorstDeviationClass(std::span<const double> r,
                        std::span<const double> gamma);

// Arc 0 with latency 1 and one arc per class with constant latency
// 1 + beta gamma_j. The tested flow sends class j to its own arc and is
// approximate for eps_j = beta gamma_j; the reference flow uses arc 0 only.
Construction GenParallelStability(double beta, std::span<const double> r,
                                  std::span<const double> gamma);

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_PARALLEL_FAMILIES_H_
