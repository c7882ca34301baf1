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

#ifndef WARDROP_BOUNDS_FORMULAS_H_
#define WARDROP_BOUNDS_FORMULAS_H_

#include <span>

#include "wardrop/bounds/bound_value.h"

namespace wardrop {

// Heterogeneous parallel bounds for class demands `r` and sensitivities
// `gamma`. Demands are divided by their total first (reported in `scale`);
// classes are taken in increasing sensitivity order. Throws InputError on
// negative or mismatched inputs or zero total demand.
//
// Stability ratio: 1 + beta * sum_j r_j gamma_j.
BoundValue SrBoundDiscrete(double beta, std::span<const double> r,
                           std::span<const double> gamma);
// Deviation ratio: 1 + beta * max_j gamma_j (r_j + ... + r_h).
BoundValue DrBoundDiscrete(double beta, std::span<const double> r,
                           std::span<const double> gamma);

// (1 + eps) / (1 - eps q) for an alternating path with q backward arcs;
// infinite when eps q >= 1.
BoundValue StabilityUpper(double eps, int q);
// The coarser (1 + eps) / (1 - eps n) in terms of the node count. Infinite
// when eps n >= 1, where it carries no information.
BoundValue StabilityUpperByNodes(double eps, int n);

// Supremum over instances on the Braess graph with n = 2m nodes:
// (1 + eps) / (1 - eps (m - 1)) for eps < 1/(m - 1), else infinite. Throws
// InputError unless n is even and at least 4.
BoundValue BraessSup(double eps, int n);

// 1 + beta for matroid congestion games.
BoundValue MatroidDrBound(double beta);
// (1 + eps) / (1 - eps (k - 1)) for eps < 1/(k - 1), else infinite. Lower
// bound for k-uniform matroid games; k >= 2.
BoundValue MatroidSrLower(double eps, int k);

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

// For 0 <= tau[k-1] <= ... <= tau[0] and c >= 0 of equal length k:
// lhs = c[0] tau[0] + sum_{i>=1} (c[i] - c[i-1]) tau[i], rhs = tau[0] max c.
// lhs <= rhs always holds. Throws InputError on shape or sign violations.
InequalitySides TelescopingSides(std::span<const double> tau,
                                 std::span<const double> c);

}  // namespace wardrop

#endif  // WARDROP_BOUNDS_FORMULAS_H_
