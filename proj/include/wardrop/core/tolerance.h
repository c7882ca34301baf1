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

#ifndef WARDROP_CORE_TOLERANCE_H_
#define WARDROP_CORE_TOLERANCE_H_

#include <algorithm>
#include <cmath>

namespace wardrop {

// Numeric tolerance shared by every check in the library. Comparisons of the
// form `a <= b` are accepted when a <= b + Allowance(a, b).
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  double Allowance(double a, double b) const {
    return rel * std::max(std::abs(a), std::abs(b)) + abs;
  }

  bool LessOrEqual(double a, double b) const {
    return a <= b + Allowance(a, b);
  }

  bool Equal(double a, double b) const {
    return std::abs(a - b) <= Allowance(a, b);
  }

  // Reads WARDROP_TOL (a positive number overriding `rel`) from the
  // environment. Invalid values are ignored.
  static Tolerance FromEnvironment();
};

}  // namespace wardrop

#endif  // WARDROP_CORE_TOLERANCE_H_
