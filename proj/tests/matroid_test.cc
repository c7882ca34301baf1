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

#include <cmath>

#include "corpus.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "wardrop/bounds/formulas.h"
#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/ratio.h"
#include "wardrop/equilibria/search.h"
#include "wardrop/equilibria/verify.h"
#include "wardrop/matroid/matroid.h"

namespace wardrop {
namespace {

TEST(MatroidGameTest, BasesInLexicographicOrder) {
  Rng rng(51);
  UniformMatroidGame game =
      testing::RandomUniformMatroid(rng, 4, 2, LatencyFamily::kAffine);
  GameInstance bases = game.ToInstance();
  ASSERT_EQ(bases.num_strategies(0), 6);
  EXPECT_EQ(bases.commodities()[0].strategies[0],
            (std::vector<std::string>{"e0", "e1"}));
  EXPECT_EQ(bases.commodities()[0].strategies[5],
            (std::vector<std::string>{"e2", "e3"}));
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) EXPECT_EQ(CountBases(n, k), oracle::Binomial(n, k));
  }
  EXPECT_EQ(CountBases(60, 30), kMaxBases + 1);
  game.rank = 0;
  EXPECT_THROW(game.ToInstance(), InputError);
  game.rank = 5;
  EXPECT_THROW(game.ToInstance(), InputError);
  UniformMatroidGame huge =
      testing::RandomUniformMatroid(rng, 40, 20, LatencyFamily::kAffine);
  EXPECT_THROW(huge.ToInstance(), RefusalError);
}

TEST(MatroidNashTest, UnboundedInstanceReferenceIsNash) {
  for (int k = 2; k <= 5; ++k) {
    Construction c = GenMatroidUnbounded(k, 1.0 / (k - 1), 10);
    EXPECT_NEAR(SocialCost(c.instance, c.reference), k, 1e-12);
    EXPECT_TRUE(VerifyNash(c.instance, c.reference).pass);
    Flow nash = ComputeNashFlow(c.instance);
    EXPECT_NEAR(SocialCost(c.instance, nash), k, 1e-8 * k);
  }
}

TEST(MatroidNashTest, RankOneMatchesParallelLinks) {
  Rng rng(52);
  for (int c = 0; c < 50; ++c) {
    UniformMatroidGame game = testing::RandomUniformMatroid(
        rng, rng.IntIn(2, 6), 1, LatencyFamily::kMixed);
    Commodity commodity{1.0, {}, {}};
    for (const Resource& r : game.ground_set) {
      commodity.strategies.push_back({r.id});
    }
    GameInstance parallel(game.ground_set, {commodity});
    Flow matroid = MatroidNashFlow(game);
    Flow links = ComputeNashFlow(parallel);
    double a = SocialCost(game.ToInstance(), matroid);
    double b = SocialCost(parallel, links);
    EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, b));
    // Identical certificates on the same flow.
    double beta = rng.Uniform(0, 1);
    std::vector<EdgeDeviation> edges =
        testing::RandomEdgeDeviations(rng, parallel, beta);
    Flow flow = Flow::FromPathFlows(parallel, testing::RandomPathFlows(rng, parallel));
    Flow same(game.ToInstance(), flow.class_path_flows());
    EquilibriumCertificate m =
        VerifyMatroidDeviated(game.ToInstance(), same, edges, beta, 1.0);
    EquilibriumCertificate p = VerifyDeviatedNash(
        parallel, flow, DeviationProfile::EdgeInduced(beta, edges),
        SensitivityProfile::FromInstance(parallel));
    EXPECT_EQ(m.pass, p.pass);
    ASSERT_EQ(m.worst.size(), p.worst.size());
    EXPECT_NEAR(m.worst[0].slack, p.worst[0].slack, 1e-12);
  }
}

TEST(MatroidNashTest, UsedBasesShareTheirLatency) {
  Rng rng(53);
  for (int c = 0; c < 50; ++c) {
    UniformMatroidGame game =
        testing::RandomUniformMatroid(rng, 4, 2, LatencyFamily::kAffine);
    GameInstance bases = game.ToInstance();
    Flow nash = MatroidNashFlow(game);
    EXPECT_TRUE(VerifyNash(bases, nash).pass);
    EXPECT_TRUE(oracle::IsApproxNash(bases, nash, {{0.0}}));
  }
}

TEST(MatroidDeviatedTest, TightInstance) {
  for (double beta : {0.0, 0.5, 1.0, 3.0}) {
    Construction c = GenMatroidDeviationTight(beta);
    const std::vector<EdgeDeviation>& edges = c.deviations->edges();
    EquilibriumCertificate cert =
        VerifyMatroidDeviated(c.instance, c.tested, edges, beta, 1.0,
                              BasisComparison::kSingleSwap, true);
    EXPECT_TRUE(cert.pass);
    EXPECT_NEAR(EmpiricalRatio(c.instance, c.tested, c.reference).ratio,
                1 + beta, 1e-12);
    EXPECT_DOUBLE_EQ(c.bound.value, 1 + beta);
    ProofClaimsReport claims =
        CheckDeviationProofClaims(c.instance, c.tested, c.reference, beta);
    EXPECT_TRUE(claims.Holds());
    if (beta > 0) {
      EXPECT_NEAR(claims.pointwise_margin, 0, 1e-12);
    }
  }
}

TEST(MatroidDeviatedTest, ZeroDeviationNashPasses) {
  Rng rng(54);
  UniformMatroidGame game =
      testing::RandomUniformMatroid(rng, 5, 2, LatencyFamily::kMixed);
  GameInstance bases = game.ToInstance();
  Flow nash = MatroidNashFlow(game);
  std::vector<EdgeDeviation> zero(bases.num_resources(), EdgeDeviation::Scaled(0));
  EXPECT_TRUE(VerifyMatroidDeviated(bases, nash, zero, 0, 1).pass);
  ProofClaimsReport claims = CheckDeviationProofClaims(bases, nash, nash, 0);
  EXPECT_TRUE(claims.Holds());
  EXPECT_DOUBLE_EQ(claims.exchange_lhs, 0);
  EXPECT_DOUBLE_EQ(claims.exchange_rhs, 0);
}

TEST(MatroidDeviatedTest, OutOfBoundDeviationIsInputError) {
  Construction c = GenMatroidDeviationTight(0.5);
  std::vector<EdgeDeviation> edges = {EdgeDeviation::Scaled(0.9),
                                      EdgeDeviation::Scaled(0)};
  EXPECT_THROW(VerifyMatroidDeviated(c.instance, c.tested, edges, 0.5, 1),
               InputError);
}

// Single swaps against every basis, on random flows where either outcome
// occurs.
TEST(MatroidDeviatedTest, SingleSwapAgreesWithFullComparison) {
  Rng rng(55);
  int passes = 0;
  for (int c = 0; c < 500; ++c) {
    UniformMatroidGame game = testing::RandomUniformMatroid(
        rng, rng.IntIn(3, 6), 2, LatencyFamily::kMixed);
    GameInstance bases = game.ToInstance();
    double beta = rng.Uniform(0, 1.5);
    double gamma = rng.Uniform(0, 2);
    std::vector<EdgeDeviation> edges =
        testing::RandomEdgeDeviations(rng, bases, beta);
    Flow flow = c % 2 ? Flow::FromPathFlows(
                            bases, testing::RandomPathFlows(rng, bases))
                      : ComputeHomogeneousDeviatedFlow(
                            bases, DeviationProfile::EdgeInduced(beta, edges),
                            gamma);
    EquilibriumCertificate single = VerifyMatroidDeviated(
        bases, flow, edges, beta, gamma, BasisComparison::kSingleSwap);
    EquilibriumCertificate full = VerifyMatroidDeviated(
        bases, flow, edges, beta, gamma, BasisComparison::kFull);
    EXPECT_EQ(single.pass, full.pass);
    EXPECT_NO_THROW(VerifyMatroidDeviated(bases, flow, edges, beta, gamma,
                                          BasisComparison::kSingleSwap, true));
    passes += full.pass;
  }
  EXPECT_GT(passes, 200);
  EXPECT_LT(passes, 500);
}

// Deviated flows solved on random 2-uniform games respect 1 + beta and both
// proof claims.
TEST(MatroidDeviatedTest, RandomGamesRespectTheBound) {
  Rng rng(56);
  for (int c = 0; c < 500; ++c) {
    UniformMatroidGame game = testing::RandomUniformMatroid(
        rng, rng.IntIn(3, 6), 2, LatencyFamily::kMixed);
    GameInstance bases = game.ToInstance();
    double beta = rng.Uniform(0, 2);
    std::vector<EdgeDeviation> edges =
        testing::RandomEdgeDeviations(rng, bases, beta);
    Flow x = ComputeHomogeneousDeviatedFlow(
        bases, DeviationProfile::EdgeInduced(beta, edges), 1.0);
    Flow z = MatroidNashFlow(game);
    ASSERT_TRUE(VerifyMatroidDeviated(bases, x, edges, beta, 1.0).pass);
    double ratio = EmpiricalRatio(bases, x, z).ratio;
    EXPECT_LE(ratio, MatroidDrBound(beta).value + 1e-9);
    ProofClaimsReport claims = CheckDeviationProofClaims(bases, x, z, beta);
    EXPECT_TRUE(claims.pointwise_holds) << claims.pointwise_worst;
    EXPECT_TRUE(claims.exchange_holds)
        << claims.exchange_lhs << " > " << claims.exchange_rhs;
  }
}

TEST(MatroidUnboundedTest, Examples) {
  Construction sub = GenMatroidUnbounded(2, 0.5, 3);
  EXPECT_NEAR(EmpiricalRatio(sub.instance, sub.tested, sub.reference).ratio, 3,
              1e-12);
  EXPECT_TRUE(VerifyApproxNash(sub.instance, sub.tested, *sub.eps).pass);
  EXPECT_DOUBLE_EQ(sub.bound.value, 3);
  Construction super = GenMatroidUnbounded(3, 0.5, 100);
  EXPECT_NEAR(EmpiricalRatio(super.instance, super.tested, super.reference).ratio,
              100, 1e-9);
  EXPECT_TRUE(VerifyApproxNash(super.instance, super.tested, *super.eps).pass);
  EXPECT_TRUE(super.bound.infinite);
  Construction zero = GenMatroidUnbounded(2, 0, 1);
  EXPECT_NEAR(EmpiricalRatio(zero.instance, zero.tested, zero.reference).ratio,
              1, 1e-12);
  EXPECT_THROW(GenMatroidUnbounded(2, 0.5, 3.5), InputError);
  EXPECT_THROW(GenMatroidUnbounded(1, 0.5, 1), InputError);
  EXPECT_THROW(GenMatroidUnbounded(2, 0.5, 0.5), InputError);
}

TEST(MatroidUnboundedTest, RatioEqualsBigM) {
  for (int k = 2; k <= 6; ++k) {
    for (double eps : {0.2 / (k - 1), 1.0 / (k - 1), 2.0 / (k - 1)}) {
      double big_m = eps < 1.0 / (k - 1) ? (1 + eps) / (1 - eps * (k - 1)) : 50;
      Construction c = GenMatroidUnbounded(k, eps, big_m);
      EXPECT_NEAR(EmpiricalRatio(c.instance, c.tested, c.reference).ratio, big_m,
                  1e-9 * big_m);
      EXPECT_TRUE(VerifyApproxNash(c.instance, c.tested, eps).pass);
    }
  }
}

// Worst approximate flows on small 2-uniform games stay below
// (1 + eps) / (1 - eps).
TEST(MatroidStabilityTest, TwoUniformGamesRespectTheUpperBound) {
  Rng rng(57);
  for (int c = 0; c < 40; ++c) {
    UniformMatroidGame game = testing::RandomUniformMatroid(
        rng, rng.IntIn(3, 4), 2, LatencyFamily::kAffine);
    GameInstance bases = game.ToInstance();
    double eps = rng.Uniform(0.05, 0.9);
    SearchResult worst = WorstApproxSearch(
        bases, SensitivityProfile::Uniform(bases, eps),
        {testing::GridFor(bases.num_strategies(0), 300000)});
    EXPECT_LE(worst.report.ratio, MatroidSrLower(eps, 2).value + 1e-9);
  }
}

}  // namespace
}  // namespace wardrop
