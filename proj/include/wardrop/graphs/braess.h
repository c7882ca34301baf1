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

#ifndef WARDROP_GRAPHS_BRAESS_H_
#define WARDROP_GRAPHS_BRAESS_H_

#include <string>

#include "wardrop/core/network.h"
#include "wardrop/equilibria/construction.h"

namespace wardrop {

enum class BraessRegime { kSubcritical, kSupercritical };

struct BraessParams {
  int m = 2;
  BraessRegime regime = BraessRegime::kSubcritical;
  double eps = 0.0;
  double tau = 0.0;  // Supercritical only.
};

// Throws InputError unless m >= 2, eps >= 0, tau >= 0 and the regime matches
// eps against 1/(m - 1).
void ValidateBraessParams(const BraessParams& params);

// Nodes s, v1..v(m-1), w1..w(m-1), t. Arcs (s,vj), (vj,wj), (wj,t) for every
// j, (vj,w(j-1)) for j >= 2, (v1,t) and (s,w(m-1)): 2m nodes, 4m - 3 arcs.
// Arc ids are "tail-head". Throws InputError for m < 2.
NetworkAnnotation BuildBraessGraph(int m);

// Arc id helpers for the Braess graph.
std::string BraessArc(const std::string& tail, const std::string& head);

// Braess instance with unit demand whose reference flow splits 1/m over the
// m paths using a cross arc (cost 1) and whose tested flow puts 1/(m-1) on
// every path s, vj, wj, t. Subcritical (eps < 1/(m-1)): ratio
// (1 + eps) / (1 - eps (m - 1)). Supercritical: ratio
// (1 + eps)(1 + (m - 1) tau).
Construction GenBraess(const BraessParams& params);
Construction GenBraessSubcritical(int m, double eps);
Construction GenBraessSupercritical(int m, double eps, double tau);

}  // namespace wardrop

#endif  // WARDROP_GRAPHS_BRAESS_H_
