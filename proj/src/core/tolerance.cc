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

#include "wardrop/core/tolerance.h"

#include <cstdlib>
#include <string>

namespace wardrop {

Tolerance Tolerance::FromEnvironment() {
  Tolerance tol;
  const char* raw = std::getenv("WARDROP_TOL");
  if (raw == nullptr) return tol;
  try {
    size_t used = 0;
    double value = std::stod(raw, &used);
    if (used == std::string(raw).size() && value > 0.0 && std::isfinite(value))
      tol.rel = value;
  } catch (const std::exception&) {
  }
  return tol;
}

}  // namespace wardrop
