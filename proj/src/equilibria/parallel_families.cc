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

#include "wardrop/equilibria/parallel_families.h"

#include <string>
#include <vector>

#include "wardrop/bounds/formulas.h"
#include "wardrop/core/errors.h"

namespace wardrop {
namespace {

void CheckClasses(double beta, std::span<const double> r,
                  std::span<const double> gamma) {
  if (!(beta >= 0.0)) throw InputError("beta must be nonnegative");
  if (r.empty() || r.size() != gamma.size()) {
    throw InputError("need one sensitivity per class demand");
  }
  for (size_t p = 0; p < r.size(); ++p) {
    if (!(r[p] > 0.0)) throw InputError("class demands must be positive");
    if (!(gamma[p] >= 0.0)) throw InputError("sensitivities must be >= 0");
    if (p > 0 && !(gamma[p] > gamma[p - 1])) {
      throw InputError("sensitivities must be strictly increasing");
    }
  }
}

std::vector<SensitivityClass> Classes(std::span<const double> r,
                                      std::span<const double> gamma) {
  std::vector<SensitivityClass> out;
  for (size_t p = 0; p < r.size(); ++p) out.push_back({r[p], gamma[p]});
  return out;
}

}  // namespace

int WorstDeviationClass(std::span<const double> r,
                        std::span<const double> gamma) {
  int best = 1;
  double best_value = -1.0;
  double tail = 0.0;
  std::vector<double> tails(r.size());
  for (size_t p = r.size(); p-- > 0;) {
    tail += r[p];
    tails[p] = tail;
  }
  for (size_t p = 0; p < r.size(); ++p) {
    double value = gamma[p] * tails[p];
    if (value > best_value) {
      best_value = value;
      best = static_cast<int>(p) + 1;
    }
  }
  return best;
}

Construction GenTwoArcDeviation(double beta, std::span<const double> r,
                                std::span<const double> gamma, int j,
                                std::optional<double> eps_prime) {
  CheckClasses(beta, r, gamma);
  const int h = static_cast<int>(r.size());
  if (j < 1 || j > h) {
    throw InputError("class index j must lie in [1, " + std::to_string(h) +
                     "]");
  }
  double total = 0.0;
  double tail = 0.0;
  for (int p = 0; p < h; ++p) {
    total += r[p];
    if (p >= j - 1) tail += r[p];
  }
  const double top = beta * gamma[j - 1];
  const double start = eps_prime.value_or(1e-6 * top);
  if (!(start >= 0.0) || start > top) {
    throw InputError("eps-prime must lie in [0, beta * gamma_j]");
  }

  std::vector<Resource> resources = {
      {"arc1", LatencyFn::Constant(1.0)},
      {"arc2", LatencyFn::PiecewiseLinear(
                   {{0.0, 1.0 + start}, {tail, 1.0 + top}}, 1.0)},
  };
  Commodity commodity;
  commodity.demand = total;
  commodity.strategies = {{"arc1"}, {"arc2"}};
  commodity.classes = Classes(r, gamma);

  Construction out;
  out.family = "two-arc-dr";
  out.instance = GameInstance(std::move(resources), {commodity});
  Flow::ClassPathFlows tested(1);
  Flow::ClassPathFlows reference(1);
  for (int p = 0; p < h; ++p) {
    tested[0].push_back(p < j - 1 ? std::vector<double>{r[p], 0.0}
                                  : std::vector<double>{0.0, r[p]});
    reference[0].push_back({r[p], 0.0});
  }
  out.tested = Flow(out.instance, std::move(tested));
  out.reference = Flow(out.instance, std::move(reference));
  out.deviations = DeviationProfile::EdgeInduced(
      beta, {EdgeDeviation::Function(LatencyFn::Constant(beta)),
             EdgeDeviation::Scaled(0.0)});
  out.bound = DrBoundDiscrete(beta, r, gamma);
  out.expected_ratio = 1.0 + top * tail / total;
  return out;
}

Construction GenParallelStability(double beta, std::span<const double> r,
                                  std::span<const double> gamma) {
  CheckClasses(beta, r, gamma);
  const int h = static_cast<int>(r.size());
  std::vector<Resource> resources = {{"arc0", LatencyFn::Constant(1.0)}};
  Commodity commodity;
  commodity.strategies = {{"arc0"}};
  double total = 0.0;
  double tested_cost = 0.0;
  std::vector<SensitivityClass> eps;
  for (int p = 0; p < h; ++p) {
    std::string id = "arc" + std::to_string(p + 1);
    resources.push_back({id, LatencyFn::Constant(1.0 + beta * gamma[p])});
    commodity.strategies.push_back({id});
    total += r[p];
    tested_cost += r[p] * (1.0 + beta * gamma[p]);
    eps.push_back({r[p], beta * gamma[p]});
  }
  commodity.demand = total;
  commodity.classes = Classes(r, gamma);

  Construction out;
  out.family = "parallel-sr";
  out.instance = GameInstance(std::move(resources), {commodity});
  Flow::ClassPathFlows tested(1);
  Flow::ClassPathFlows reference(1);
  for (int p = 0; p < h; ++p) {
    std::vector<double> own(h + 1, 0.0);
    own[p + 1] = r[p];
    tested[0].push_back(std::move(own));
    std::vector<double> base(h + 1, 0.0);
    base[0] = r[p];
    reference[0].push_back(std::move(base));
  }
  out.tested = Flow(out.instance, std::move(tested));
  out.reference = Flow(out.instance, std::move(reference));
  out.eps = SensitivityProfile({eps});
  out.bound = SrBoundDiscrete(beta, r, gamma);
  out.expected_ratio = tested_cost / total;
  return out;
}

}  // namespace wardrop
