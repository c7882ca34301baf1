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

#ifndef WARDROP_MATROID_MATROID_H_
#define WARDROP_MATROID_MATROID_H_

#include <string>
#include <vector>

#include "wardrop/core/deviation.h"
#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/tolerance.h"
#include "wardrop/equilibria/certificate.h"
#include "wardrop/equilibria/construction.h"

namespace wardrop {

constexpr long kMaxBases = 1000000;

// Single-commodity game whose strategies are the k-subsets of the ground
// set.
struct UniformMatroidGame {
  std::vector<Resource> ground_set;
  int rank = 1;
  double demand = 1.0;
  std::vector<SensitivityClass> classes;  // Empty: one class, sensitivity 1.

  // Bases in lexicographic order of ground-set positions. Throws InputError
  // unless 1 <= rank <= |E|, RefusalError past kMaxBases bases.
  GameInstance ToInstance() const;
};

// Number of k-subsets of an n-set, saturating at kMaxBases + 1.
long CountBases(int n, int k);

// Nash flow over the bases.
Flow MatroidNashFlow(const UniformMatroidGame& game);

enum class BasisComparison {
  kSingleSwap,  // Compare each used basis with bases differing in one element.
  kFull,        // Compare with every basis.
};

// Deviated certificate over bases with basis deviation
// sum_{e in B} delta_e(f_e) and a common sensitivity gamma. Works for any
// instance whose strategies are the bases of a matroid. With
// `cross_check`, both comparisons run and an InvariantError is thrown when
// they disagree. Throws InputError when 0 <= delta_e <= beta l_e fails.
EquilibriumCertificate VerifyMatroidDeviated(
    const GameInstance& bases, const Flow& flow,
    const std::vector<EdgeDeviation>& deviations, double beta, double gamma,
    BasisComparison comparison = BasisComparison::kSingleSwap,
    bool cross_check = false, const Tolerance& tol = {});

// Ground set e0 (latency 1) and e1..ek (latency through ((k-1)/k, 1) and
// (1, M)), rank k, unit demand. Reference flow: 1/k on each E \ {ej};
// tested flow: everything on {e1..ek}; ratio M. Throws InputError unless
// k >= 2, eps >= 0, M >= 1 and, when eps < 1/(k-1),
// M <= (1 + eps)/(1 - eps (k - 1)).
Construction GenMatroidUnbounded(int k, double eps, double big_m);

// Two resources, latency 1 with deviation beta and a latency rising from
// 1 + eps_prime at 0 to 1 + beta at load 1; 1-uniform with unit demand. The
// tested flow (everything on the second resource) is beta-deviated, ratio
// 1 + beta.
Construction GenMatroidDeviationTight(double beta, double eps_prime = 0.0);

struct ProofClaimsReport {
  // l_e(x_e) <= (1 + beta) l_e(z_e) on every resource with x_e > z_e.
  bool pointwise_holds = true;
  double pointwise_margin = 0.0;  // Smallest (1 + beta) l(z) - l(x).
  std::string pointwise_worst;    // Resource attaining it, if any.
  // sum_{x>z} (x - z) l(x) <= (1 + beta) sum_{z>=x} (z - x) l(x).
  double exchange_lhs = 0.0;
  double exchange_rhs = 0.0;
  bool exchange_holds = true;

  bool Holds() const { return pointwise_holds && exchange_holds; }
};

ProofClaimsReport CheckDeviationProofClaims(const GameInstance& bases,
                                            const Flow& x, const Flow& z,
                                            double beta,
                                            const Tolerance& tol = {});

}  // namespace wardrop

#endif  // WARDROP_MATROID_MATROID_H_
