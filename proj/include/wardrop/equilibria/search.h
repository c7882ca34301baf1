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

#ifndef WARDROP_EQUILIBRIA_SEARCH_H_
#define WARDROP_EQUILIBRIA_SEARCH_H_

#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/sensitivity.h"
#include "wardrop/core/tolerance.h"
#include "wardrop/equilibria/ratio.h"

namespace wardrop {

struct SearchOptions {
  // Grid points per unit of demand; every class of demand r is split into
  // round(r * grid) (at least one) equal units.
  int grid = 100;
  // Refuse when the number of grid flows exceeds this.
  long max_points = 20000000;
};

struct SearchResult {
  Flow flow;
  RatioReport report;
  long visited = 0;
  long accepted = 0;
};

constexpr int kMaxSearchVariables = 8;

// Enumerates every grid flow (class-by-class in lexicographic order), keeps
// those that are eps-approximate for the profile and returns the one of
// largest social cost; the first maximizer wins ties. The ratio is measured
// against the instance's Nash flow. Throws RefusalError when more than
// kMaxSearchVariables (strategy, class) pairs exist or the grid is too
// large, InputError when grid < 2 and PreconditionError when no grid flow
// is eps-approximate.
SearchResult WorstApproxSearch(const GameInstance& instance,
                               const SensitivityProfile& eps,
                               const SearchOptions& options = {},
                               const Tolerance& tol = {});

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_SEARCH_H_
