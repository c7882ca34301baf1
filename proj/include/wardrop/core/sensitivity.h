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

#ifndef WARDROP_CORE_SENSITIVITY_H_
#define WARDROP_CORE_SENSITIVITY_H_

#include <string>
#include <vector>

#include "wardrop/core/instance.h"
#include "wardrop/core/tolerance.h"

namespace wardrop {

// Per-commodity sensitivity classes. The same type carries deviation
// sensitivities (gamma) and approximation factors (epsilon).
class SensitivityProfile {
 public:
  SensitivityProfile() = default;
  explicit SensitivityProfile(
      std::vector<std::vector<SensitivityClass>> classes)
      : classes_(std::move(classes)) {}

  // The classes declared by the instance.
  static SensitivityProfile FromInstance(const GameInstance& instance);
  // The instance's class demands with every sensitivity set to `value`.
  static SensitivityProfile Uniform(const GameInstance& instance,
                                    double value);

  // Every sensitivity multiplied by `factor` (epsilon = beta * gamma).
  SensitivityProfile Scaled(double factor) const;

  int num_commodities() const { return static_cast<int>(classes_.size()); }
  const std::vector<SensitivityClass>& classes(int commodity) const {
    return classes_[commodity];
  }
  double sensitivity(int commodity, int cls) const {
    return classes_[commodity][cls].sensitivity;
  }
  bool Homogeneous() const;

  // Shape and demand agreement with the instance, nonnegativity, and
  // pairwise-distinct sensitivities within each commodity.
  std::vector<std::string> Violations(const GameInstance& instance,
                                      const Tolerance& tol = {}) const;

 private:
  std::vector<std::vector<SensitivityClass>> classes_;
};

}  // namespace wardrop

#endif  // WARDROP_CORE_SENSITIVITY_H_
