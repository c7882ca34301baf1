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

#ifndef WARDROP_TOOLS_FAMILIES_H_
#define WARDROP_TOOLS_FAMILIES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wardrop/core/tolerance.h"
#include "wardrop/equilibria/construction.h"
#include "wardrop/io/json.h"

namespace wardrop::cli {

// Generator parameters; unset fields take family defaults.
struct GenParams {
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> j;
  std::optional<int> depth;
  std::optional<int> grid;
  std::optional<uint64_t> seed;
  std::optional<double> eps;
  std::optional<double> beta;
  std::optional<double> tau;
  std::optional<double> eps_prime;
  std::optional<double> big_m;
  std::optional<double> tail;
  std::optional<std::vector<double>> r;
  std::optional<std::vector<double>> gamma;
  std::optional<std::string> latency;
  std::optional<std::string> density;
  std::optional<std::string> measure;  // density-discretize: "sr" or "dr".
};

// braess-sub, braess-super, two-arc-dr, parallel-sr, matroid-unbounded,
// random-sp, density-discretize.
const std::vector<std::string>& FamilyNames();
bool IsFamily(const std::string& family);

// Parameter names of a family in CSV column order.
const std::vector<std::string>& FamilyParamNames(const std::string& family);

// Builds the family's construction. Throws InputError on invalid or missing
// parameters.
Construction BuildConstruction(const std::string& family,
                               const GenParams& params, const Tolerance& tol);

// The parameters as given, for echoing into generated files.
Json ParamsToJson(const std::string& family, const GenParams& params);

// Extra family output beside the construction (bounds of the continuous
// density for density-discretize); null otherwise.
Json FamilyExtras(const std::string& family, const GenParams& params);

// End-to-end measurement of one parameter combination: the reference is a
// freshly solved Nash flow, the tested flow is verified against its eps
// profile or deviations, and q comes from the alternating path on networks.
struct RowOutcome {
  double ratio = 0.0;
  BoundValue bound;
  std::optional<int> q;
  std::string status;  // "ok", "unverified", "bound-violated" or "error: ..."
  int exit_code = 0;   // Exit code the failure maps to; 0 when fine.
};
RowOutcome EvaluateFamily(const std::string& family, const GenParams& params,
                          const Tolerance& tol);

}  // namespace wardrop::cli

#endif  // WARDROP_TOOLS_FAMILIES_H_
