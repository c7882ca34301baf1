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

#include "wardrop/matroid/matroid.h"

#include <algorithm>
#include <limits>
#include <map>

#include "wardrop/bounds/formulas.h"
#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"
#include "wardrop/core/sensitivity.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/verify.h"

namespace wardrop {
namespace {

void Subsets(int n, int k, int start, std::vector<int>& current,
             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int e = start; e <= n - (k - static_cast<int>(current.size())); ++e) {
    current.push_back(e);
    Subsets(n, k, e + 1, current, out);
    current.pop_back();
  }
}

EquilibriumCertificate SingleSwapCertificate(
    const GameInstance& bases, const Flow& flow, const DeviationProfile& dev,
    double gamma, const Tolerance& tol) {
  const int n = bases.num_strategies(0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> members(n);
  std::vector<double> cost(n, 0.0);
  std::vector<double> resource_cost(bases.num_resources());
  for (int e = 0; e < bases.num_resources(); ++e) {
    double load = flow.Load(e);
    resource_cost[e] = bases.latency(e)(load) + gamma * dev.EdgeValue(bases, e, load);
  }
  for (int b = 0; b < n; ++b) {
    std::span<const int> ids = bases.Strategy(0, b);
    members[b].assign(ids.begin(), ids.end());
    std::sort(members[b].begin(), members[b].end());
    index.emplace(members[b], b);
    for (int e : members[b]) cost[b] += resource_cost[e];
  }
  EquilibriumCertificate cert;
  cert.kind = CertificateKind::kDeviated;
  for (int j = 0; j < flow.num_classes(0); ++j) {
    ClassViolation record;
    record.cls = j;
    for (int b = 0; b < n; ++b) {
      if (!(flow.ClassPathFlow(0, j, b) > tol.abs)) continue;
      int witness = b;
      double witness_cost = cost[b];
      for (size_t out = 0; out < members[b].size(); ++out) {
        for (int in = 0; in < bases.num_resources(); ++in) {
          if (std::binary_search(members[b].begin(), members[b].end(), in))
            continue;
          std::vector<int> swapped = members[b];
          swapped[out] = in;
          std::sort(swapped.begin(), swapped.end());
          auto it = index.find(swapped);
          if (it == index.end()) continue;
          if (cost[it->second] < witness_cost ||
              (cost[it->second] == witness_cost && it->second < witness)) {
            witness_cost = cost[it->second];
            witness = it->second;
          }
        }
      }
      double slack = ConditionSlack(cost[b], witness_cost, tol);
      if (record.used_path < 0 || slack < record.slack) {
        record.used_path = b;
        record.witness_path = witness;
        record.lhs = cost[b];
        record.rhs = witness_cost;
        record.slack = slack;
      }
    }
    if (record.slack < -tol.abs) cert.pass = false;
    cert.worst.push_back(record);
  }
  return cert;
}

}  // namespace

long CountBases(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double value = 1.0;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > static_cast<double>(kMaxBases)) return kMaxBases + 1;
  }
  return static_cast<long>(value + 0.5);
}

GameInstance UniformMatroidGame::ToInstance() const {
  const int n = static_cast<int>(ground_set.size());
  if (rank < 1 || rank > n) {
    throw InputError("rank must lie in [1, |E|]");
  }
  if (CountBases(n, rank) > kMaxBases) {
    throw RefusalError("more than " + std::to_string(kMaxBases) + " bases");
  }
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  Subsets(n, rank, 0, current, subsets);
  Commodity commodity;
  commodity.demand = demand;
  commodity.classes = classes;
  for (const std::vector<int>& subset : subsets) {
    std::vector<std::string> ids;
    for (int e : subset) ids.push_back(ground_set[e].id);
    commodity.strategies.push_back(std::move(ids));
  }
  return GameInstance(ground_set, {std::move(commodity)});
}

Flow MatroidNashFlow(const UniformMatroidGame& game) {
  return ComputeNashFlow(game.ToInstance());
}

EquilibriumCertificate VerifyMatroidDeviated(
    const GameInstance& bases, const Flow& flow,
    const std::vector<EdgeDeviation>& deviations, double beta, double gamma,
    BasisComparison comparison, bool cross_check, const Tolerance& tol) {
  if (!bases.SingleCommodity()) {
    throw PreconditionError("matroid games here have one commodity");
  }
  DeviationProfile profile = DeviationProfile::EdgeInduced(beta, deviations);
  std::vector<std::string> outside =
      profile.MembershipViolations(bases, flow, tol);
  if (!outside.empty()) {
    throw InputError("edge deviations outside their bound: " + outside.front());
  }
  auto full = [&]() {
    return VerifyDeviatedNash(bases, flow, profile,
                              SensitivityProfile::Uniform(bases, gamma), tol);
  };
  auto swap = [&]() {
    return SingleSwapCertificate(bases, flow, profile, gamma, tol);
  };
  if (cross_check) {
    EquilibriumCertificate a = swap();
    EquilibriumCertificate b = full();
    if (a.pass != b.pass) {
      throw InvariantError("single-swap and full basis comparisons disagree");
    }
    return comparison == BasisComparison::kFull ? b : a;
  }
  return comparison == BasisComparison::kFull ? full() : swap();
}

Construction GenMatroidUnbounded(int k, double eps, double big_m) {
  if (k < 2) throw InputError("rank k must be at least 2");
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  if (!(big_m >= 1.0)) throw InputError("M must be at least 1");
  if (eps < 1.0 / (k - 1)) {
    double limit = (1.0 + eps) / (1.0 - eps * (k - 1));
    if (!Tolerance{}.LessOrEqual(big_m, limit)) {
      throw InputError(
          "M = " + std::to_string(big_m) +
          " breaks the approximate Nash condition k M <= (1 + eps)(1 + (k-1) "
          "M); need M <= " +
          std::to_string(limit));
    }
  }
  const double knee = static_cast<double>(k - 1) / k;
  UniformMatroidGame game;
  game.rank = k;
  game.demand = 1.0;
  game.ground_set.push_back({"e0", LatencyFn::Constant(1.0)});
  for (int j = 1; j <= k; ++j) {
    game.ground_set.push_back(
        {"e" + std::to_string(j),
         LatencyFn::PiecewiseLinear({{knee, 1.0}, {1.0, big_m}},
                                    (big_m - 1.0) * k)});
  }
  Construction out;
  out.family = "matroid-unbounded";
  out.instance = game.ToInstance();
  const int n = out.instance.num_strategies(0);
  std::vector<double> tested(n, 0.0);
  std::vector<double> reference(n, 0.0);
  for (int b = 0; b < n; ++b) {
    const auto& ids = out.instance.commodities()[0].strategies[b];
    bool has_e0 = std::find(ids.begin(), ids.end(), "e0") != ids.end();
    if (has_e0) {
      reference[b] = 1.0 / k;
    } else {
      tested[b] = 1.0;
    }
  }
  out.tested = Flow::FromPathFlows(out.instance, {tested});
  out.reference = Flow::FromPathFlows(out.instance, {reference});
  out.eps = SensitivityProfile({{{1.0, eps}}});
  out.bound = MatroidSrLower(eps, k);
  out.expected_ratio = big_m;
  return out;
}

Construction GenMatroidDeviationTight(double beta, double eps_prime) {
  if (!(beta >= 0.0)) throw InputError("beta must be nonnegative");
  if (!(eps_prime >= 0.0) || eps_prime > beta) {
    throw InputError("eps-prime must lie in [0, beta]");
  }
  UniformMatroidGame game;
  game.rank = 1;
  game.demand = 1.0;
  game.ground_set = {
      {"e1", LatencyFn::Constant(1.0)},
      {"e2", LatencyFn::PiecewiseLinear({{0.0, 1.0 + eps_prime},
                                         {1.0, 1.0 + beta}},
                                        1.0)},
  };
  Construction out;
  out.family = "matroid-dr";
  out.instance = game.ToInstance();
  out.tested = Flow::FromPathFlows(out.instance, {{0.0, 1.0}});
  out.reference = Flow::FromPathFlows(out.instance, {{1.0, 0.0}});
  out.deviations = DeviationProfile::EdgeInduced(
      beta, {EdgeDeviation::Function(LatencyFn::Constant(beta)),
             EdgeDeviation::Scaled(0.0)});
  out.bound = MatroidDrBound(beta);
  out.expected_ratio = 1.0 + beta;
  return out;
}

ProofClaimsReport CheckDeviationProofClaims(const GameInstance& bases,
                                            const Flow& x, const Flow& z,
                                            double beta,
                                            const Tolerance& tol) {
  ProofClaimsReport report;
  report.pointwise_margin = std::numeric_limits<double>::infinity();
  double below = 0.0;
  for (int e = 0; e < bases.num_resources(); ++e) {
    const LatencyFn& l = bases.latency(e);
    double xe = x.Load(e);
    double ze = z.Load(e);
    double at_x = l(xe);
    if (xe > ze + tol.abs) {
      double bound = (1.0 + beta) * l(ze);
      double margin = bound - at_x;
      if (margin < report.pointwise_margin) {
        report.pointwise_margin = margin;
        report.pointwise_worst = bases.resources()[e].id;
      }
      if (ConditionSlack(at_x, bound, tol) < -tol.abs) {
        report.pointwise_holds = false;
      }
      report.exchange_lhs += (xe - ze) * at_x;
    } else if (ze >= xe) {
      below += (ze - xe) * at_x;
    }
  }
  if (report.pointwise_worst.empty()) report.pointwise_margin = 0.0;
  report.exchange_rhs = (1.0 + beta) * below;
  report.exchange_holds =
      ConditionSlack(report.exchange_lhs, report.exchange_rhs, tol) >= -tol.abs;
  return report;
}

}  // namespace wardrop
