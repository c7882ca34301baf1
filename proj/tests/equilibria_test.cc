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

#include <algorithm>
#include <cmath>

#include "corpus.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "wardrop/bounds/density.h"
#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"
#include "wardrop/equilibria/heterogeneous.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/parallel_families.h"
#include "wardrop/equilibria/ratio.h"
#include "wardrop/equilibria/search.h"
#include "wardrop/equilibria/verify.h"
#include "wardrop/graphs/braess.h"
#include "wardrop/matroid/matroid.h"

namespace wardrop {
namespace {

GameInstance Pigou() {
  return GameInstance({{"e1", LatencyFn::Affine(0, 1)},
                       {"e2", LatencyFn::Constant(1)}},
                      {{1.0, {{"e1"}, {"e2"}}, {}}});
}

// Used strategies share one latency and unused ones are no cheaper.
void ExpectNashLevels(const GameInstance& instance, const Flow& flow) {
  for (int i = 0; i < instance.num_commodities(); ++i) {
    double level = -1;
    double lowest = INFINITY;
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      double l = StrategyLatency(instance, flow, i, p);
      lowest = std::min(lowest, l);
      if (flow.PathFlow(i, p) > 1e-12) level = std::max(level, l);
    }
    for (int p = 0; p < instance.num_strategies(i); ++p) {
      double l = StrategyLatency(instance, flow, i, p);
      if (flow.PathFlow(i, p) > 1e-12) {
        EXPECT_NEAR(l, level, 1e-9 * std::max(1.0, level));
      }
    }
    EXPECT_GE(lowest, level - 1e-9 * std::max(1.0, level));
  }
}

TEST(NashTest, PigouSendsEverythingOnTheVariableLink) {
  for (NashMethod method : {NashMethod::kParallelExact, NashMethod::kFrankWolfe}) {
    NashResult result = SolveNash(Pigou(), {method});
    EXPECT_NEAR(result.flow.PathFlow(0, 0), 1, 1e-8);
    EXPECT_NEAR(SocialCost(Pigou(), result.flow), 1, 1e-8);
  }
}

TEST(NashTest, BraessSplitsOverCrossPaths) {
  for (int m = 2; m <= 6; ++m) {
    for (Construction c : {GenBraessSubcritical(m, 0.5 / (m - 1)),
                           GenBraessSupercritical(m, 2.0 / (m - 1), 3.0)}) {
      Flow nash = ComputeNashFlow(c.instance);
      EXPECT_NEAR(SocialCost(c.instance, nash), 1, 1e-8);
      EXPECT_TRUE(VerifyNash(c.instance, nash).pass);
      EXPECT_TRUE(VerifyNash(c.instance, c.reference).pass);
    }
  }
}

TEST(NashTest, TwoArcReferenceUsesTheConstantArc) {
  std::vector<double> r = {0.3, 0.7}, gamma = {1, 2};
  Construction c = GenTwoArcDeviation(1, r, gamma, 2);
  Flow nash = ComputeNashFlow(c.instance);
  EXPECT_NEAR(nash.PathFlow(0, 0), 1, 1e-9);
  EXPECT_NEAR(nash.PathFlow(0, 1), 0, 1e-9);
  EXPECT_NEAR(SocialCost(c.instance, nash), 1, 1e-9);
}

TEST(NashTest, UsedLatenciesEqualOnRandomInstances) {
  Rng rng(21);
  for (int c = 0; c < 150; ++c) {
    GameInstance instance =
        c % 2 ? testing::RandomParallel(rng, rng.IntIn(2, 6),
                                        LatencyFamily::kMixed,
                                        rng.Uniform(0.5, 3))
              : testing::RandomNetwork(rng, rng.IntIn(4, 6), 12, 30,
                                       LatencyFamily::kMixed);
    NashResult result = SolveNash(instance);
    EXPECT_LE(result.relative_gap, 1e-9);
    ExpectNashLevels(instance, result.flow);
    EXPECT_TRUE(VerifyNash(instance, result.flow).pass);
  }
}

TEST(NashTest, ParallelCostMatchesOracle) {
  Rng rng(22);
  for (int c = 0; c < 200; ++c) {
    double demand = rng.Uniform(0.2, 4);
    GameInstance instance = testing::RandomParallel(
        rng, rng.IntIn(2, 8), LatencyFamily::kMixed, demand);
    std::vector<LatencyFn> latencies;
    for (const Resource& r : instance.resources()) latencies.push_back(r.latency);
    double expected = oracle::ParallelNashCost(latencies, demand);
    double cost = SocialCost(instance, ComputeNashFlow(instance));
    EXPECT_NEAR(cost, expected, 1e-8 * std::max(1.0, expected));
  }
}

TEST(NashTest, PotentialNotAboveRandomFlows) {
  Rng rng(23);
  for (int c = 0; c < 20; ++c) {
    GameInstance instance = testing::RandomNetwork(rng, 5, 12, 20,
                                                   LatencyFamily::kMixed);
    Flow nash = ComputeNashFlow(instance);
    double potential = BeckmannPotential(instance, nash);
    for (int k = 0; k < 100; ++k) {
      Flow other = Flow::FromPathFlows(
          instance, testing::RandomPathFlows(rng, instance));
      double scale = std::max(1.0, std::abs(potential));
      EXPECT_LE(potential, BeckmannPotential(instance, other) + 1e-9 * scale);
    }
  }
}

TEST(NashTest, FrankWolfeAgreesWithParallelExact) {
  Rng rng(24);
  for (int c = 0; c < 50; ++c) {
    GameInstance instance = testing::RandomParallel(
        rng, rng.IntIn(2, 5), LatencyFamily::kMixed, rng.Uniform(0.5, 2));
    NashResult exact = SolveNash(instance, {NashMethod::kParallelExact});
    NashResult fw = SolveNash(instance, {NashMethod::kFrankWolfe});
    EXPECT_EQ(fw.method, NashMethod::kFrankWolfe);
    EXPECT_LE(fw.relative_gap, 1e-9);
    double a = SocialCost(instance, exact.flow);
    double b = SocialCost(instance, fw.flow);
    EXPECT_NEAR(a, b, 1e-8 * std::max(1.0, a));
  }
}

TEST(NashTest, ParallelExactRejectsNetworks) {
  Construction braess = GenBraessSubcritical(3, 0.1);
  EXPECT_THROW(SolveNash(braess.instance, {NashMethod::kParallelExact}),
               PreconditionError);
}

TEST(NashTest, IterationCapRaisesConvergenceError) {
  Construction braess = GenBraessSubcritical(4, 0.1);
  NashOptions options{NashMethod::kFrankWolfe, 1, 1e-15};
  try {
    SolveNash(braess.instance, options);
    // One iteration may already be exact; then nothing to check.
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.residual(), 1e-15);
  }
}

TEST(VerifyTest, BraessTestedFlowIsApproximate) {
  for (int m = 2; m <= 6; ++m) {
    double eps = 0.5 / (m - 1);
    Construction c = GenBraessSubcritical(m, eps);
    EXPECT_TRUE(VerifyApproxNash(c.instance, c.tested, *c.eps).pass);
    EXPECT_TRUE(VerifyApproxNash(c.instance, c.tested, eps).pass);
    EquilibriumCertificate half = VerifyApproxNash(c.instance, c.tested, eps / 2);
    EXPECT_FALSE(half.pass);
    ASSERT_EQ(half.worst.size(), 1u);
    EXPECT_LT(half.worst[0].slack, 0);
    // The witness is one of the cheaper cross paths.
    EXPECT_LT(half.worst[0].rhs, half.worst[0].lhs);
    EXPECT_TRUE(oracle::IsApproxNash(c.instance, c.tested, {{eps}}));
    EXPECT_FALSE(oracle::IsApproxNash(c.instance, c.tested, {{eps / 2}}));
  }
}

TEST(VerifyTest, NashFlowsPassWithZeroEps) {
  Construction c = GenBraessSupercritical(3, 0.6, 2);
  EquilibriumCertificate cert = VerifyApproxNash(c.instance, c.reference, 0.0);
  EXPECT_TRUE(cert.pass);
  EXPECT_EQ(cert.kind, CertificateKind::kApprox);
  EXPECT_TRUE(VerifyNash(c.instance, c.reference).pass);
  EXPECT_FALSE(VerifyNash(c.instance, c.tested).pass);
}

TEST(VerifyTest, CertificateAgreesWithOracleOnRandomFlows) {
  Rng rng(25);
  for (int c = 0; c < 500; ++c) {
    GameInstance instance = testing::RandomParallel(rng, rng.IntIn(2, 4),
                                                    LatencyFamily::kAffine);
    Flow flow =
        Flow::FromPathFlows(instance, testing::RandomPathFlows(rng, instance));
    double eps = rng.Uniform(0, 1);
    EquilibriumCertificate cert = VerifyApproxNash(instance, flow, eps);
    EXPECT_EQ(cert.pass, oracle::IsApproxNash(instance, flow, {{eps}}));
    bool all = true;
    for (const ClassViolation& v : cert.worst) all &= v.slack >= -1e-12;
    EXPECT_EQ(cert.pass, all);
  }
}

TEST(VerifyTest, TwoArcDeviatedFlowPasses) {
  std::vector<double> r = {0.2, 0.3, 0.5}, gamma = {0, 1, 3};
  for (int j = 1; j <= 3; ++j) {
    Construction c = GenTwoArcDeviation(1.5, r, gamma, j);
    SensitivityProfile profile = SensitivityProfile::FromInstance(c.instance);
    EXPECT_TRUE(
        VerifyDeviatedNash(c.instance, c.tested, *c.deviations, profile).pass);
    EquilibriumCertificate approx = VerifyApproxNash(
        c.instance, c.tested, profile.Scaled(c.deviations->beta()));
    EXPECT_TRUE(approx.pass);
    EXPECT_TRUE(
        DeviatedAsApprox(c.instance, c.tested, *c.deviations, profile).pass);
  }
}

TEST(VerifyTest, ZeroDeviationNashPasses) {
  Construction c = GenBraessSubcritical(3, 0.25);
  DeviationProfile zero = DeviationProfile::Zero(c.instance);
  SensitivityProfile profile = SensitivityProfile::FromInstance(c.instance);
  EXPECT_TRUE(VerifyDeviatedNash(c.instance, c.reference, zero, profile).pass);
  EXPECT_TRUE(DeviatedAsApprox(c.instance, c.reference, zero, profile).pass);
}

TEST(VerifyTest, MatroidTightFlowIsDeviated) {
  for (double beta : {0.0, 0.5, 1.0, 2.0}) {
    Construction c = GenMatroidDeviationTight(beta, 0.25 * beta);
    SensitivityProfile profile = SensitivityProfile::FromInstance(c.instance);
    EXPECT_TRUE(
        VerifyDeviatedNash(c.instance, c.tested, *c.deviations, profile).pass);
  }
}

TEST(VerifyTest, DeviationOutsideBoundNamesThePath) {
  GameInstance pigou = Pigou();
  Flow flow = Flow::FromPathFlows(pigou, {{0.5, 0.5}});
  DeviationProfile big = DeviationProfile::Explicit(0.1, {{0.5, 0}});
  try {
    VerifyDeviatedNash(pigou, flow, big,
                       SensitivityProfile::FromInstance(pigou));
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("e1"), std::string::npos);
  }
}

TEST(DeviationsFromApproxTest, SubtractsFromTheSlowestUsedPath) {
  GameInstance two({{"a", LatencyFn::Constant(1)},
                    {"b", LatencyFn::Constant(1.2)}},
                   {{1.0, {{"a"}, {"b"}}, {}}});
  Flow flow = Flow::FromPathFlows(two, {{0.5, 0.5}});
  DeviationProfile d = DeviationsFromApprox(two, flow, 0.2, 1.0);
  EXPECT_NEAR(d.PathDeviation(two, flow, 0, 0), 0.2, 1e-12);
  EXPECT_NEAR(d.PathDeviation(two, flow, 0, 1), 0, 1e-12);
  EXPECT_NEAR(d.beta(), 0.2, 1e-15);
  EXPECT_TRUE(VerifyDeviatedNash(two, flow, d,
                                 SensitivityProfile::Uniform(two, 1.0))
                  .pass);
  EXPECT_THROW(DeviationsFromApprox(two, flow, 0.1, 1.0), PreconditionError);
}

TEST(DeviationsFromApproxTest, NashFlowGetsZeroOnUsedPaths) {
  Construction c = GenBraessSubcritical(3, 0.25);
  DeviationProfile d = DeviationsFromApprox(c.instance, c.reference, 0.0);
  for (int p = 0; p < c.instance.num_strategies(0); ++p) {
    if (c.reference.PathFlow(0, p) > 0) {
      EXPECT_NEAR(d.PathDeviation(c.instance, c.reference, 0, p), 0, 1e-12);
    }
  }
}

TEST(DeviationsFromApproxTest, BraessRoundTrip) {
  Construction c = GenBraessSubcritical(3, 0.25);
  for (double gamma : {0.5, 1.0, 4.0}) {
    DeviationProfile d = DeviationsFromApprox(c.instance, c.tested, 0.25, gamma);
    EXPECT_NEAR(d.beta(), 0.25 / gamma, 1e-15);
    EXPECT_TRUE(d.MembershipViolations(c.instance, c.tested).empty());
    SensitivityProfile profile = SensitivityProfile::Uniform(c.instance, gamma);
    EXPECT_TRUE(VerifyDeviatedNash(c.instance, c.tested, d, profile).pass);
  }
}

// Approximate flows found by grid search turn into deviated flows, and the
// deviated flows pass the approximate check again.
TEST(DeviationsFromApproxTest, RandomRoundTrip) {
  Rng rng(26);
  int checked = 0;
  for (int c = 0; c < 300; ++c) {
    GameInstance instance = testing::RandomParallel(rng, rng.IntIn(2, 4),
                                                    LatencyFamily::kMixed);
    double eps = rng.Uniform(0, 1);
    Flow flow =
        Flow::FromPathFlows(instance, testing::RandomPathFlows(rng, instance));
    if (!VerifyApproxNash(instance, flow, eps).pass) continue;
    ++checked;
    double gamma = rng.Uniform(0.1, 3);
    DeviationProfile d = DeviationsFromApprox(instance, flow, eps, gamma);
    SensitivityProfile profile = SensitivityProfile::Uniform(instance, gamma);
    EXPECT_TRUE(VerifyDeviatedNash(instance, flow, d, profile).pass);
    EXPECT_TRUE(DeviatedAsApprox(instance, flow, d, profile).pass);
  }
  EXPECT_GT(checked, 20);
}

// Deviated flows computed for random parallel instances, random classes and
// random deviations pass the approximate check with eps = beta gamma.
TEST(InclusionTest, RandomParallelDeviatedFlowsAreApproximate) {
  Rng rng(27);
  for (int c = 0; c < 1000; ++c) {
    std::vector<double> r, gamma;
    testing::RandomClasses(rng, rng.IntIn(1, 3), r, gamma);
    std::vector<SensitivityClass> classes;
    for (size_t k = 0; k < r.size(); ++k) classes.push_back({r[k], gamma[k]});
    GameInstance instance = testing::RandomParallel(
        rng, rng.IntIn(2, 4), LatencyFamily::kMixed, 1.0, classes);
    double beta = rng.Uniform(0, 2);
    DeviationProfile d = DeviationProfile::EdgeInduced(
        beta, testing::RandomEdgeDeviations(rng, instance, beta));
    SensitivityProfile profile = SensitivityProfile::FromInstance(instance);
    Flow flow = HeterogeneousParallelEquilibrium(instance, d, profile);
    ASSERT_TRUE(VerifyDeviatedNash(instance, flow, d, profile).pass);
    EXPECT_TRUE(DeviatedAsApprox(instance, flow, d, profile).pass);
    EXPECT_TRUE(VerifyApproxNash(instance, flow, profile.Scaled(beta)).pass);
  }
}

TEST(HeterogeneousTest, TwoArcInstanceReproducesTheConstruction) {
  std::vector<double> r = {0.2, 0.3, 0.5}, gamma = {0.5, 1, 3};
  for (int j = 1; j <= 3; ++j) {
    Construction c = GenTwoArcDeviation(1, r, gamma, j);
    Flow flow = HeterogeneousParallelEquilibrium(
        c.instance, *c.deviations, SensitivityProfile::FromInstance(c.instance));
    double expected = 0;
    for (int p = j - 1; p < 3; ++p) expected += r[p];
    EXPECT_NEAR(flow.PathFlow(0, 1), expected, 1e-6);
    EXPECT_NEAR(SocialCost(c.instance, flow), c.expected_ratio, 1e-6);
  }
}

TEST(HeterogeneousTest, ZeroDeviationsGiveTheNashFlow) {
  Rng rng(28);
  for (int c = 0; c < 50; ++c) {
    std::vector<double> r, gamma;
    testing::RandomClasses(rng, 2, r, gamma);
    GameInstance instance = testing::RandomParallel(
        rng, 3, LatencyFamily::kAffine, 1.0, {{r[0], gamma[0]}, {r[1], gamma[1]}});
    Flow flow = HeterogeneousParallelEquilibrium(
        instance, DeviationProfile::Zero(instance),
        SensitivityProfile::FromInstance(instance));
    double a = SocialCost(instance, flow);
    double b = SocialCost(instance, ComputeNashFlow(instance));
    EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, b));
  }
}

TEST(HeterogeneousTest, DiscretizedDensityMatchesTheConstruction) {
  DiscreteClasses classes = DiscretizeDensity(DensityFn::Uniform(0, 1), 0.1, 0);
  int j = WorstDeviationClass(classes.demand, classes.sensitivity);
  Construction c =
      GenTwoArcDeviation(1, classes.demand, classes.sensitivity, j);
  Flow flow = HeterogeneousParallelEquilibrium(
      c.instance, *c.deviations, SensitivityProfile::FromInstance(c.instance));
  for (int k = 0; k < c.tested.num_classes(0); ++k) {
    for (int p = 0; p < 2; ++p) {
      EXPECT_NEAR(flow.ClassPathFlow(0, k, p), c.tested.ClassPathFlow(0, k, p),
                  1e-6);
    }
  }
}

TEST(HeterogeneousTest, RejectsNetworks) {
  Construction c = GenBraessSubcritical(3, 0.25);
  EXPECT_THROW(HeterogeneousParallelEquilibrium(
                   c.instance, DeviationProfile::Zero(c.instance),
                   SensitivityProfile::FromInstance(c.instance)),
               PreconditionError);
}

TEST(SearchTest, ParallelStabilityWorstFlow) {
  Construction c = GenParallelStability(1, std::vector<double>{1},
                                        std::vector<double>{1});
  SearchResult result = WorstApproxSearch(c.instance, *c.eps, {100});
  EXPECT_NEAR(result.flow.PathFlow(0, 1), 1, 1e-12);
  EXPECT_NEAR(result.report.ratio, 2, 1e-9);
}

TEST(SearchTest, ZeroEpsGivesNashCost) {
  SearchResult result =
      WorstApproxSearch(Pigou(), SensitivityProfile::Uniform(Pigou(), 0), {100});
  EXPECT_NEAR(result.report.ratio, 1, 1e-9);
}

TEST(SearchTest, PigouWithHalfEps) {
  SearchResult result = WorstApproxSearch(
      Pigou(), SensitivityProfile::Uniform(Pigou(), 0.5), {1000});
  EXPECT_NEAR(result.report.ratio, 1, 1e-9);
  EXPECT_GT(result.accepted, 1);
}

TEST(SearchTest, ParallelStabilityWithinTwoGridSteps) {
  Rng rng(29);
  for (int c = 0; c < 20; ++c) {
    std::vector<double> r, gamma;
    testing::RandomClasses(rng, rng.IntIn(1, 2), r, gamma);
    double beta = rng.Uniform(0, 2);
    Construction cons = GenParallelStability(beta, r, gamma);
    int grid = 20;
    SearchResult result = WorstApproxSearch(cons.instance, *cons.eps, {grid});
    EXPECT_NEAR(result.report.ratio, cons.bound.value, 2.0 / grid);
  }
}

TEST(SearchTest, Refusals) {
  Rng rng(1);
  GameInstance nine =
      testing::RandomParallel(rng, 9, LatencyFamily::kAffine);
  EXPECT_THROW(WorstApproxSearch(nine, SensitivityProfile::Uniform(nine, 0.1)),
               RefusalError);
  EXPECT_THROW(
      WorstApproxSearch(Pigou(), SensitivityProfile::Uniform(Pigou(), 0.1), {1}),
      InputError);
}

TEST(RatioTest, Examples) {
  for (int m = 2; m <= 6; ++m) {
    double eps = 0.3 / (m - 1);
    Construction c = GenBraessSubcritical(m, eps);
    RatioReport report = EmpiricalRatio(c.instance, c.tested, c.reference);
    EXPECT_NEAR(report.ratio, (1 + eps) / (1 - eps * (m - 1)), 1e-12);
    EXPECT_DOUBLE_EQ(
        EmpiricalRatio(c.instance, c.tested, c.tested).ratio, 1.0);
  }
  std::vector<double> r = {0.25, 0.75}, gamma = {1, 2};
  Construction two = GenTwoArcDeviation(1, r, gamma, 2);
  EXPECT_NEAR(EmpiricalRatio(two.instance, two.tested, two.reference).ratio,
              1 + 2 * 0.75, 1e-12);
}

TEST(RatioTest, ZeroReferenceCostIsDegenerate) {
  GameInstance linear({{"e", LatencyFn::Affine(0, 1)}}, {{1.0, {{"e"}}, {}}});
  Flow flow = Flow::FromPathFlows(linear, {{1}});
  GameInstance zero({{"e", LatencyFn::Constant(0)}}, {{1.0, {{"e"}}, {}}});
  Flow zflow = Flow::FromPathFlows(zero, {{1}});
  EXPECT_THROW(EmpiricalRatio(zero, zflow, zflow), DegenerateInstanceError);
  EXPECT_NO_THROW(EmpiricalRatio(linear, flow, flow));
}

TEST(InclusionTest, GeneratorCorpus) {
  for (const Construction& c : testing::GeneratorCorpus()) {
    SCOPED_TRACE(c.family);
    SensitivityProfile profile = SensitivityProfile::FromInstance(c.instance);
    if (c.deviations) {
      EquilibriumCertificate dev =
          VerifyDeviatedNash(c.instance, c.tested, *c.deviations, profile);
      EXPECT_TRUE(dev.pass);
      EXPECT_TRUE(
          DeviatedAsApprox(c.instance, c.tested, *c.deviations, profile).pass);
    }
    if (c.eps) {
      EXPECT_TRUE(VerifyApproxNash(c.instance, c.tested, *c.eps).pass);
    }
    EXPECT_TRUE(VerifyNash(c.instance, c.reference).pass);
  }
}

}  // namespace
}  // namespace wardrop
