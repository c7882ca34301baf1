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

#include "wardrop/core/sensitivity.h"

#include <algorithm>

namespace wardrop {

SensitivityProfile SensitivityProfile::FromInstance(
    const GameInstance& instance) {
  std::vector<std::vector<SensitivityClass>> classes;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    classes.push_back(instance.classes(i));
  }
  return SensitivityProfile(std::move(classes));
}

SensitivityProfile SensitivityProfile::Uniform(const GameInstance& instance,
                                               double value) {
  SensitivityProfile profile = FromInstance(instance);
  for (auto& commodity : profile.classes_) {
    for (SensitivityClass& cls : commodity) cls.sensitivity = value;
  }
  return profile;
}

SensitivityProfile SensitivityProfile::Scaled(double factor) const {
  SensitivityProfile out = *this;
  for (auto& commodity : out.classes_) {
    for (SensitivityClass& cls : commodity) cls.sensitivity *= factor;
  }
  return out;
}

bool SensitivityProfile::Homogeneous() const {
  bool first = true;
  double value = 0.0;
  for (const auto& commodity : classes_) {
    for (const SensitivityClass& cls : commodity) {
      if (first) {
        value = cls.sensitivity;
        first = false;
      } else if (cls.sensitivity != value) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::string> SensitivityProfile::Violations(
    const GameInstance& instance, const Tolerance& tol) const {
  std::vector<std::string> out;
  if (num_commodities() != instance.num_commodities()) {
    out.push_back("profile has " + std::to_string(num_commodities()) +
                  " commodities, instance has " +
                  std::to_string(instance.num_commodities()));
    return out;
  }
  for (int i = 0; i < num_commodities(); ++i) {
    const std::string where = "commodity " + std::to_string(i) + ": ";
    const auto& classes = classes_[i];
    if (classes.empty()) {
      out.push_back(where + "no classes");
      continue;
    }
    double total = 0.0;
    std::vector<double> sensitivities;
    for (const SensitivityClass& cls : classes) {
      if (!(cls.demand > 0.0)) out.push_back(where + "class demand must be > 0");
      if (cls.sensitivity < 0.0)
        out.push_back(where + "negative class sensitivity");
      total += cls.demand;
      sensitivities.push_back(cls.sensitivity);
    }
    if (!tol.Equal(total, instance.demand(i))) {
      out.push_back(where + "class demands sum to " + std::to_string(total) +
                    ", commodity demand is " +
                    std::to_string(instance.demand(i)));
    }
    std::sort(sensitivities.begin(), sensitivities.end());
    if (std::adjacent_find(sensitivities.begin(), sensitivities.end()) !=
        sensitivities.end()) {
      out.push_back(where + "class sensitivities are not pairwise distinct");
    }
  }
  return out;
}

}  // namespace wardrop
