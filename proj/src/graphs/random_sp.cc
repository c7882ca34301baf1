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

#include "wardrop/graphs/random_sp.h"

#include <vector>

#include "wardrop/core/errors.h"
#include "wardrop/graphs/paths.h"

namespace wardrop {
namespace {

constexpr double kLeafProbability = 0.3;

SPTree Grow(Rng& rng, int height, bool parallel, int& next_arc) {
  auto child = [&]() {
    if (height == 1 || rng.Bernoulli(kLeafProbability)) {
      return SPTree::Leaf("a" + std::to_string(next_arc++));
    }
    return Grow(rng, height - 1, !parallel, next_arc);
  };
  SPTree first = child();
  SPTree second = child();
  return parallel ? SPTree::Parallel(std::move(first), std::move(second))
                  : SPTree::Series(std::move(first), std::move(second));
}

}  // namespace

LatencyFamily ParseLatencyFamily(const std::string& name) {
  if (name == "affine") return LatencyFamily::kAffine;
  if (name == "poly") return LatencyFamily::kPolynomial;
  if (name == "pwl") return LatencyFamily::kPiecewiseLinear;
  if (name == "mixed") return LatencyFamily::kMixed;
  throw InputError("unknown latency family '" + name + "'");
}

const char* LatencyFamilyName(LatencyFamily family) {
  switch (family) {
    case LatencyFamily::kAffine:
      return "affine";
    case LatencyFamily::kPolynomial:
      return "poly";
    case LatencyFamily::kPiecewiseLinear:
      return "pwl";
    case LatencyFamily::kMixed:
      return "mixed";
  }
  return "unknown";
}

LatencyFn RandomLatency(Rng& rng, LatencyFamily family) {
  if (family == LatencyFamily::kMixed) {
    family = static_cast<LatencyFamily>(rng.Below(3));
  }
  switch (family) {
    case LatencyFamily::kAffine:
      return LatencyFn::Affine(rng.Uniform(0.0, 2.0), rng.Uniform(0.0, 2.0));
    case LatencyFamily::kPolynomial: {
      std::vector<double> coefficients(rng.IntIn(2, 4));
      for (double& c : coefficients) c = rng.Uniform(0.0, 1.0);
      coefficients[0] += 0.1;
      return LatencyFn::Polynomial(std::move(coefficients));
    }
    case LatencyFamily::kPiecewiseLinear:
    case LatencyFamily::kMixed: {
      std::vector<Breakpoint> points;
      double load = 0.0;
      double value = rng.Uniform(0.0, 2.0);
      int count = rng.IntIn(2, 4);
      for (int k = 0; k < count; ++k) {
        points.push_back({load, value});
        load += rng.Uniform(0.1, 0.6);
        value += rng.Bernoulli(0.25) ? 0.0 : rng.Uniform(0.0, 3.0);
      }
      return LatencyFn::PiecewiseLinear(std::move(points),
                                        rng.Uniform(0.0, 3.0));
    }
  }
  return LatencyFn::Constant(1.0);
}

RandomSpInstance GenRandomSp(uint64_t seed, int depth, LatencyFamily family,
                             double demand) {
  if (depth < 1 || depth > kMaxRandomSpDepth) {
    throw InputError("depth must lie in [1, " +
                     std::to_string(kMaxRandomSpDepth) + "]");
  }
  if (!(demand > 0.0)) throw InputError("demand must be positive");
  Rng rng(seed);
  int next_arc = 0;
  SPTree tree = Grow(rng, depth, /*parallel=*/true, next_arc);
  NetworkAnnotation graph = tree.ToNetwork();
  std::vector<LatencyFn> latencies;
  for (size_t a = 0; a < graph.arcs.size(); ++a) {
    latencies.push_back(RandomLatency(rng, family));
  }
  return {NetworkInstance(graph, latencies, demand), std::move(tree)};
}

}  // namespace wardrop
