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

#ifndef WARDROP_GRAPHS_RANDOM_SP_H_
#define WARDROP_GRAPHS_RANDOM_SP_H_

#include <cstdint>
#include <string>

#include "wardrop/core/instance.h"
#include "wardrop/core/rng.h"
#include "wardrop/graphs/sp_tree.h"

namespace wardrop {

enum class LatencyFamily { kAffine, kPolynomial, kPiecewiseLinear, kMixed };

// "affine", "poly", "pwl" or "mixed"; throws InputError otherwise.
LatencyFamily ParseLatencyFamily(const std::string& name);
const char* LatencyFamilyName(LatencyFamily family);

// A random nonnegative non-decreasing latency of the family.
LatencyFn RandomLatency(Rng& rng, LatencyFamily family);

struct RandomSpInstance {
  GameInstance instance;
  SPTree tree;
};

constexpr int kMaxRandomSpDepth = 8;

// Random series-parallel network of unit demand. The root is a parallel
// composition; below it, series and parallel levels alternate and every
// child of a node at height > 1 is a leaf with probability 0.3, so depth 1
// gives two parallel arcs. Arcs are "a0", "a1", ... in tree order. The same
// seed always gives the same instance. Throws InputError unless
// 1 <= depth <= 8, RefusalError when the path count exceeds the cap.
RandomSpInstance GenRandomSp(uint64_t seed, int depth, LatencyFamily family,
                             double demand = 1.0);

}  // namespace wardrop

#endif  // WARDROP_GRAPHS_RANDOM_SP_H_
