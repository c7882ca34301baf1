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

#ifndef WARDROP_BOUNDS_BOUND_VALUE_H_
#define WARDROP_BOUNDS_BOUND_VALUE_H_

#include <limits>
#include <string>
#include <utility>

namespace wardrop {

// A closed-form inefficiency bound. `infinite` is set exactly when the
// formula's validity condition (echoed in `requires_condition`) fails and the
// ratio is unbounded there.
struct BoundValue {
  std::string name;
  double value = 0.0;
  bool infinite = false;
  std::string requires_condition;
  // Total demand the inputs were divided by before applying a formula that
  // assumes unit demand; 1 when no scaling happened.
  double scale = 1.0;

  static BoundValue Finite(std::string name, double value,
                           std::string requires_condition = "") {
    return {std::move(name), value, false, std::move(requires_condition), 1.0};
  }
  static BoundValue Infinite(std::string name,
                             std::string requires_condition) {
    return {std::move(name), std::numeric_limits<double>::infinity(), true,
            std::move(requires_condition), 1.0};
  }

  bool operator==(const BoundValue&) const = default;
};

}  // namespace wardrop

#endif  // WARDROP_BOUNDS_BOUND_VALUE_H_
