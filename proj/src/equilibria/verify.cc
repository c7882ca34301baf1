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

#include "wardrop/equilibria/verify.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"

namespace wardrop {
namespace {

// Evaluates one side of a condition for (commodity, class, strategy).
using Side = std::function<double(int, int, int)>;

EquilibriumCertificate Check(const GameInstance& instance, const Flow& flow,
                             CertificateKind kind, const Side& lhs_of,
                             const Side& rhs_of, const Tolerance& tol) {
  EquilibriumCertificate cert;
  cert.kind = kind;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    const int n = instance.num_strategies(i);
    for (int j = 0; j < flow.num_classes(i); ++j) {
      ClassViolation record;
      record.commodity = i;
      record.cls = j;
      int witness = -1;
      double witness_rhs = std::numeric_limits<double>::infinity();
      for (int q = 0; q < n; ++q) {
        double rhs = rhs_of(i, j, q);
        if (rhs < witness_rhs) {
          witness_rhs = rhs;
          witness = q;
        }
      }
      for (int p = 0; p < n; ++p) {
        if (!(flow.ClassPathFlow(i, j, p) > tol.abs)) continue;
        double lhs = lhs_of(i, j, p);
        double slack = ConditionSlack(lhs, witness_rhs, tol);
        if (record.used_path < 0 || slack < record.slack) {
          record.used_path = p;
          record.witness_path = witness;
          record.lhs = lhs;
          record.rhs = witness_rhs;
          record.slack = slack;
        }
      }
      if (record.slack < -tol.abs) cert.pass = false;
      cert.worst.push_back(record);
    }
  }
  return cert;
}

void RequireMatchingClasses(const Flow& flow, const SensitivityProfile& profile) {
  if (profile.num_commodities() != flow.num_commodities()) {
    throw InputError("sensitivity profile and flow differ in commodities");
  }
  for (int i = 0; i < flow.num_commodities(); ++i) {
    if (static_cast<int>(profile.classes(i).size()) != flow.num_classes(i)) {
      throw InputError("sensitivity profile and flow differ in the classes "
                       "of commodity " +
                       std::to_string(i));
    }
  }
}

std::vector<std::vector<double>> StrategyLatencies(const GameInstance& instance,
                                                   const Flow& flow) {
  std::vector<std::vector<double>> out(instance.num_commodities());
  for (int i = 0; i < instance.num_commodities(); ++i) {
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      out[i].push_back(StrategyLatency(instance, flow, i, p));
    }
  }
  return out;
}

}  // namespace

const char* CertificateKindName(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kNash:
      return "nash";
    case CertificateKind::kApprox:
      return "eps-approx";
    case CertificateKind::kDeviated:
      return "beta-deviated";
  }
  return "unknown";
}

double EquilibriumCertificate::WorstSlack() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const ClassViolation& record : this->worst) {
    worst = std::min(worst, record.slack);
  }
  return worst;
}

EquilibriumCertificate VerifyNash(const GameInstance& instance,
                                  const Flow& flow, const Tolerance& tol) {
  auto latencies = StrategyLatencies(instance, flow);
  Side side = [&](int i, int, int p) { return latencies[i][p]; };
  return Check(instance, flow, CertificateKind::kNash, side, side, tol);
}

EquilibriumCertificate VerifyApproxNash(const GameInstance& instance,
                                        const Flow& flow,
                                        const SensitivityProfile& eps,
                                        const Tolerance& tol) {
  RequireMatchingClasses(flow, eps);
  auto latencies = StrategyLatencies(instance, flow);
  Side lhs = [&](int i, int, int p) { return latencies[i][p]; };
  Side rhs = [&](int i, int j, int p) {
    return (1.0 + eps.sensitivity(i, j)) * latencies[i][p];
  };
  return Check(instance, flow, CertificateKind::kApprox, lhs, rhs, tol);
}

EquilibriumCertificate VerifyApproxNash(const GameInstance& instance,
                                        const Flow& flow, double eps,
                                        const Tolerance& tol) {
  std::vector<std::vector<SensitivityClass>> classes(flow.num_commodities());
  for (int i = 0; i < flow.num_commodities(); ++i) {
    for (int j = 0; j < flow.num_classes(i); ++j) {
      classes[i].push_back({instance.classes(i)[j].demand, eps});
    }
  }
  return VerifyApproxNash(instance, flow, SensitivityProfile(classes), tol);
}

EquilibriumCertificate VerifyDeviatedNash(const GameInstance& instance,
                                          const Flow& flow,
                                          const DeviationProfile& deviations,
                                          const SensitivityProfile& gamma,
                                          const Tolerance& tol) {
  RequireMatchingClasses(flow, gamma);
  std::vector<std::string> outside =
      deviations.MembershipViolations(instance, flow, tol);
  if (!outside.empty()) {
    throw InputError("deviations outside Delta(beta): " + outside.front());
  }
  auto latencies = StrategyLatencies(instance, flow);
  std::vector<std::vector<double>> delta(instance.num_commodities());
  for (int i = 0; i < instance.num_commodities(); ++i) {
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      delta[i].push_back(deviations.PathDeviation(instance, flow, i, p));
    }
  }
  Side side = [&](int i, int j, int p) {
    return latencies[i][p] + gamma.sensitivity(i, j) * delta[i][p];
  };
  return Check(instance, flow, CertificateKind::kDeviated, side, side, tol);
}

EquilibriumCertificate DeviatedAsApprox(const GameInstance& instance,
                                        const Flow& flow,
                                        const DeviationProfile& deviations,
                                        const SensitivityProfile& gamma,
                                        const Tolerance& tol) {
  return VerifyApproxNash(instance, flow, gamma.Scaled(deviations.beta()),
                          tol);
}

DeviationProfile DeviationsFromApprox(const GameInstance& instance,
                                      const Flow& flow, double eps,
                                      double gamma, const Tolerance& tol) {
  if (!(gamma > 0.0)) throw InputError("gamma must be positive");
  if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
  if (!instance.SingleCommodity()) {
    throw PreconditionError("deviations from an approximate flow need a "
                            "single commodity");
  }
  EquilibriumCertificate cert = VerifyApproxNash(instance, flow, eps, tol);
  if (!cert.pass) {
    throw PreconditionError("flow is not eps-approximate (worst slack " +
                            std::to_string(cert.WorstSlack()) + ")");
  }
  const int n = instance.num_strategies(0);
  std::vector<double> latency(n);
  std::vector<bool> used(n, false);
  double highest_used = 0.0;
  for (int p = 0; p < n; ++p) {
    latency[p] = StrategyLatency(instance, flow, 0, p);
    for (int j = 0; j < flow.num_classes(0); ++j) {
      if (flow.ClassPathFlow(0, j, p) > tol.abs) used[p] = true;
    }
    if (used[p]) highest_used = std::max(highest_used, latency[p]);
  }
  const double beta = eps / gamma;
  std::vector<double> values(n);
  for (int p = 0; p < n; ++p) {
    values[p] = used[p] ? (highest_used - latency[p]) / gamma
                        : beta * latency[p];
  }
  return DeviationProfile::Explicit(beta, {values});
}

}  // namespace wardrop
