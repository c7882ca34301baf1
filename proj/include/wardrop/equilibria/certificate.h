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

#ifndef WARDROP_EQUILIBRIA_CERTIFICATE_H_
#define WARDROP_EQUILIBRIA_CERTIFICATE_H_

#include <limits>
#include <vector>

#include "wardrop/core/tolerance.h"

namespace wardrop {

enum class CertificateKind { kNash, kApprox, kDeviated };

const char* CertificateKindName(CertificateKind kind);

// The tightest condition lhs <= rhs found for one class: `used_path` carries
// class flow, `witness_path` is the alternative minimizing rhs. A class with
// no used path keeps the indices at -1 and an infinite slack.
struct ClassViolation {
  int commodity = 0;
  int cls = 0;
  int used_path = -1;
  int witness_path = -1;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = std::numeric_limits<double>::infinity();
};

struct EquilibriumCertificate {
  CertificateKind kind = CertificateKind::kNash;
  std::vector<ClassViolation> worst;
  bool pass = true;

  double WorstSlack() const;
};

// rhs - lhs + rel * max(|lhs|, |rhs|); a condition holds when this is at
// least -abs.
inline double ConditionSlack(double lhs, double rhs, const Tolerance& tol) {
  return rhs - lhs + tol.rel * std::max(std::abs(lhs), std::abs(rhs));
}

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_CERTIFICATE_H_
