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

#include "wardrop/bounds/formulas.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "wardrop/core/errors.h"

namespace wardrop {
namespace {

struct NormalizedClasses {
  std::vector<double> r;      // Sums to 1, ordered by gamma.
  std::vector<double> gamma;  // Non-decreasing.
  double scale = 1.0;
};

NormalizedClasses Normalize(double beta, std::span<const double> r,
                            std::span<const double> gamma) {
  if (!(beta >= 0.0)) throw InputError("beta must be nonnegative");
  if (r.size() != gamma.size()) {
    throw InputError("class demands and sensitivities differ in length");
  }
  if (r.empty()) throw InputError("no classes");
  double total = 0.0;
  for (size_t j = 0; j < r.size(); ++j) {
    if (!(r[j] >= 0.0)) throw InputError("negative class demand");
    if (!(gamma[j] >= 0.0)) throw InputError("negative class sensitivity");
    total += r[j];
  }
  if (!(total > 0.0)) throw InputError("total class demand is zero");
  std::vector<size_t> order(r.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return gamma[a] < gamma[b]; });
  NormalizedClasses out;
  out.scale = total;
  for (size_t j : order) {
    out.r.push_back(total == 1.0 ? r[j] : r[j] / total);
    out.gamma.push_back(gamma[j]);
  }
  return out;
}

}  // namespace

BoundValue SrBoundDiscrete(double beta, std::span<const double> r,
                           std::span<const double> gamma) {
  NormalizedClasses classes = Normalize(beta, r, gamma);
  double mean = 0.0;
  for (size_t j = 0; j < classes.r.size(); ++j) {
    mean += classes.r[j] * classes.gamma[j];
  }
  BoundValue bound = BoundValue::Finite("sr_discrete", 1.0 + beta * mean);
  bound.scale = classes.scale;
  return bound;
}

BoundValue DrBoundDiscrete(double beta, std::span<const double> r,
                           std::span<const double> gamma) {
  NormalizedClasses classes = Normalize(beta, r, gamma);
  double best = 0.0;
  double tail = 0.0;
  for (size_t j = classes.r.size(); j-- > 0;) {
    tail += classes.r[j];
    best = std::max(best, classes.gamma[j] * tail);
  }
  BoundValue bound = BoundValue::Finite("dr_discrete", 1.0 + beta * best);
  bound.scale = classes.scale;
  return bound;
}

BoundValue StabilityUpper(double eps, int q) {
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  if (q < 0) throw InputError("q must be nonnegative");
  const char* condition = "eps*q < 1";
  if (eps * q < 1.0) {
    return BoundValue::Finite("stability_upper", (1.0 + eps) / (1.0 - eps * q),
                              condition);
  }
  return BoundValue::Infinite("stability_upper", condition);
}

BoundValue StabilityUpperByNodes(double eps, int n) {
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  if (n < 0) throw InputError("node count must be nonnegative");
  const char* condition = "eps*n < 1";
  if (eps * n < 1.0) {
    return BoundValue::Finite("stability_upper_nodes",
                              (1.0 + eps) / (1.0 - eps * n), condition);
  }
  return BoundValue::Infinite("stability_upper_nodes", condition);
}

BoundValue BraessSup(double eps, int n) {
  if (n < 4 || n % 2 != 0) {
    throw InputError("Braess graphs have an even node count of at least 4");
  }
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  const int m = n / 2;
  const char* condition = "eps < 1/(n/2 - 1)";
  if (eps < 1.0 / (m - 1)) {
    return BoundValue::Finite("braess_sup", (1.0 + eps) / (1.0 - eps * (m - 1)),
                              condition);
  }
  return BoundValue::Infinite("braess_sup", condition);
}

BoundValue MatroidDrBound(double beta) {
  if (!(beta >= 0.0)) throw InputError("beta must be nonnegative");
  return BoundValue::Finite("matroid_dr", 1.0 + beta);
}

BoundValue MatroidSrLower(double eps, int k) {
  if (k < 2) throw InputError("matroid rank must be at least 2");
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  const char* condition = "eps < 1/(k - 1)";
  if (eps < 1.0 / (k - 1)) {
    return BoundValue::Finite("matroid_sr_lower",
                              (1.0 + eps) / (1.0 - eps * (k - 1)), condition);
  }
  return BoundValue::Infinite("matroid_sr_lower", condition);
}

InequalitySides TelescopingSides(std::span<const double> tau,
                                 std::span<const double> c) {
  if (tau.empty() || tau.size() != c.size()) {
    throw InputError("tau and c must be nonempty and of equal length");
  }
  for (size_t i = 0; i < tau.size(); ++i) {
    if (!(tau[i] >= 0.0) || !(c[i] >= 0.0)) {
      throw InputError("tau and c must be nonnegative");
    }
    if (i > 0 && tau[i] > tau[i - 1]) {
      throw InputError("tau must be nonincreasing");
    }
  }
  InequalitySides sides;
  sides.lhs = c[0] * tau[0];
  for (size_t i = 1; i < tau.size(); ++i) sides.lhs += (c[i] - c[i - 1]) * tau[i];
  sides.rhs = tau[0] * *std::max_element(c.begin(), c.end());
  return sides;
}

}  // namespace wardrop
