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

#ifndef WARDROP_GRAPHS_ALTERNATING_H_
#define WARDROP_GRAPHS_ALTERNATING_H_

#include <string>
#include <vector>

#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/tolerance.h"

namespace wardrop {

// Arc classes comparing a tested flow x with a reference flow z: arcs idle
// under both are removed; Z holds arcs with z_a > 0 and z_a >= x_a; X holds
// the rest. Comparisons use tol.abs.
enum class ArcLabel { kRemoved, kZ, kX };

const char* ArcLabelName(ArcLabel label);

struct AlternatingStep {
  int arc = 0;           // Index into the graph's arc list.
  bool forward = true;   // Forward steps use Z arcs, backward steps X arcs.
};

struct AlternatingPath {
  std::vector<ArcLabel> labels;  // Per graph arc.
  std::vector<AlternatingStep> steps;
  int q = 0;  // Number of backward steps.
};

std::vector<ArcLabel> LabelArcs(const GameInstance& instance, const Flow& x,
                                const Flow& z, const Tolerance& tol = {});

// Source-sink path that traverses Z arcs forward and X arcs backward, with
// the fewest X arcs. Throws PreconditionError unless the instance is a
// single-commodity network, StructuralError when no such path exists.
AlternatingPath ComputeAlternatingPath(const GameInstance& instance,
                                       const Flow& x, const Flow& z,
                                       const Tolerance& tol = {});

// Source-sink path of Z arcs only (arc ids from source to sink). Throws
// StructuralError when none exists.
std::vector<std::string> FindZDominantPath(const GameInstance& instance,
                                           const Flow& x, const Flow& z,
                                           const Tolerance& tol = {});

// Orientation rule check for a candidate path: consecutive steps connect,
// start at the source, end at the sink, visit no node twice, use only Z arcs
// forward and X arcs backward. Returns an empty string when valid.
std::string AlternatingPathError(const GameInstance& instance,
                                 const AlternatingPath& path);

}  // namespace wardrop

#endif  // WARDROP_GRAPHS_ALTERNATING_H_
