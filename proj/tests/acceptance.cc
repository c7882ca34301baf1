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

// Acceptance run: one PASS/FAIL line per criterion with its processor time,
// which is held to the criterion's single-core budget. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.h"
#include "oracles.h"
#include "wardrop/bounds/density.h"
#include "wardrop/bounds/formulas.h"
#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"
#include "wardrop/core/rng.h"
#include "wardrop/equilibria/heterogeneous.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/parallel_families.h"
#include "wardrop/equilibria/ratio.h"
#include "wardrop/equilibria/search.h"
#include "wardrop/equilibria/verify.h"
#include "wardrop/graphs/alternating.h"
#include "wardrop/graphs/braess.h"
#include "wardrop/graphs/random_sp.h"
#include "wardrop/matroid/matroid.h"

namespace wardrop {
namespace {

// Outcome of one criterion; `detail` names the first failure or summarizes
// the checks.
struct Outcome {
  bool pass = true;
  std::string detail;
  long checks = 0;

  void Check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string Str(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

bool RelClose(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

double MeasuredRatio(const GameInstance& instance, const Flow& tested) {
  return EmpiricalRatio(instance, tested, ComputeNashFlow(instance)).ratio;
}

Outcome BraessSubcritical() {
  Outcome out;
  for (int m = 2; m <= 8; ++m) {
    for (double scale : {0.1, 0.5, 0.9}) {
      double eps = scale / (m - 1);
      Construction c = GenBraessSubcritical(m, eps);
      double expected = (1 + eps) / (1 - eps * (m - 1));
      std::string name = "m=" + std::to_string(m) + " eps=" + Str(eps);
      out.Check(VerifyApproxNash(c.instance, c.tested, eps).pass,
                name + " tested flow is not approximate");
      double ratio = MeasuredRatio(c.instance, c.tested);
      out.Check(RelClose(ratio, expected, 1e-9),
                name + " ratio " + Str(ratio) + " vs " + Str(expected));
    }
  }
  return out;
}

Outcome BraessSupercritical() {
  Outcome out;
  const int m = 3;
  const double eps = 0.5;
  double last = 0;
  for (double tau : {1.0, 10.0, 100.0, 1000.0}) {
    Construction c = GenBraessSupercritical(m, eps, tau);
    double expected = (1 + eps) * (1 + (m - 1) * tau);
    out.Check(VerifyApproxNash(c.instance, c.tested, eps).pass,
              "tau=" + Str(tau) + " tested flow is not approximate");
    last = MeasuredRatio(c.instance, c.tested);
    out.Check(RelClose(last, expected, 1e-9),
              "tau=" + Str(tau) + " ratio " + Str(last) + " vs " + Str(expected));
  }
  out.Check(last > 1000, "ratio at tau=1000 is " + Str(last));
  return out;
}

Outcome ParallelTightness() {
  Outcome out;
  Rng rng(1001);
  for (int c = 0; c < 20; ++c) {
    int h = c % 5 + 1;
    std::vector<double> r, gamma;
    testing::RandomClasses(rng, h, r, gamma);
    double beta = rng.Uniform(0.1, 2);
    std::string name = "case " + std::to_string(c);

    int j = WorstDeviationClass(r, gamma);
    Construction two = GenTwoArcDeviation(beta, r, gamma, j);
    double dr = DrBoundDiscrete(beta, r, gamma).value;
    SensitivityProfile profile = SensitivityProfile::FromInstance(two.instance);
    Flow solved = HeterogeneousParallelEquilibrium(two.instance,
                                                   *two.deviations, profile);
    out.Check(VerifyDeviatedNash(two.instance, solved, *two.deviations, profile)
                  .pass,
              name + " solved two-arc flow is not deviated Nash");
    double solved_ratio = MeasuredRatio(two.instance, solved);
    out.Check(RelClose(solved_ratio, dr, 1e-6),
              name + " two-arc ratio " + Str(solved_ratio) + " vs " + Str(dr));
    double built_ratio = MeasuredRatio(two.instance, two.tested);
    out.Check(RelClose(built_ratio, dr, 1e-6),
              name + " constructed two-arc ratio " + Str(built_ratio));

    Construction sr = GenParallelStability(beta, r, gamma);
    double bound = SrBoundDiscrete(beta, r, gamma).value;
    out.Check(VerifyApproxNash(sr.instance, sr.tested, *sr.eps).pass,
              name + " parallel tested flow is not approximate");
    double ratio = MeasuredRatio(sr.instance, sr.tested);
    out.Check(RelClose(ratio, bound, 1e-9),
              name + " parallel ratio " + Str(ratio) + " vs " + Str(bound));
  }
  return out;
}

Outcome MarkovDominance() {
  Outcome out;
  Rng rng(1002);
  for (int c = 0; c < 10000; ++c) {
    std::vector<double> r, gamma;
    testing::RandomClasses(rng, rng.IntIn(1, 8), r, gamma);
    double beta = rng.Uniform(0, 3);
    double dr = DrBoundDiscrete(beta, r, gamma).value;
    double sr = SrBoundDiscrete(beta, r, gamma).value;
    out.Check(dr <= sr, "case " + std::to_string(c) + " dr " + Str(dr) +
                            " > sr " + Str(sr));
  }
  return out;
}

// Deviated flows pass the approximate check with eps = beta gamma, and
// approximate flows of homogeneous single-class instances round trip through
// constructed deviations.
Outcome DeviationApproxLinks() {
  Outcome out;
  int round_trips = 0;
  for (const Construction& c : testing::GeneratorCorpus()) {
    SensitivityProfile profile = SensitivityProfile::FromInstance(c.instance);
    if (c.deviations &&
        VerifyDeviatedNash(c.instance, c.tested, *c.deviations, profile).pass) {
      out.Check(
          DeviatedAsApprox(c.instance, c.tested, *c.deviations, profile).pass,
          c.family + " deviated flow is not approximate");
    }
    bool homogeneous = c.instance.SingleCommodity() &&
                       c.instance.num_classes(0) == 1 && c.eps &&
                       c.eps->Homogeneous();
    if (homogeneous && VerifyApproxNash(c.instance, c.tested, *c.eps).pass) {
      double eps = c.eps->sensitivity(0, 0);
      DeviationProfile built = DeviationsFromApprox(c.instance, c.tested, eps);
      out.Check(VerifyDeviatedNash(c.instance, c.tested, built,
                                   SensitivityProfile::Uniform(c.instance, 1))
                    .pass,
                c.family + " round trip failed");
      ++round_trips;
    }
  }
  Rng rng(1005);
  for (int c = 0; c < 1000; ++c) {
    std::string name = "random case " + std::to_string(c);
    bool homogeneous = c % 2 == 0;
    std::vector<double> r, gamma;
    testing::RandomClasses(rng, homogeneous ? 1 : rng.IntIn(2, 4), r, gamma);
    std::vector<SensitivityClass> classes;
    for (size_t k = 0; k < r.size(); ++k) {
      classes.push_back({r[k], homogeneous ? 1.0 : gamma[k]});
    }
    GameInstance instance = testing::RandomParallel(
        rng, rng.IntIn(2, 5), LatencyFamily::kMixed, 1.0, classes);
    double beta = rng.Uniform(0, 2);
    DeviationProfile d = DeviationProfile::EdgeInduced(
        beta, testing::RandomEdgeDeviations(rng, instance, beta));
    SensitivityProfile profile = SensitivityProfile::FromInstance(instance);
    Flow flow = HeterogeneousParallelEquilibrium(instance, d, profile);
    if (!VerifyDeviatedNash(instance, flow, d, profile).pass) {
      out.Check(false, name + " solver returned a non-equilibrium");
      continue;
    }
    out.Check(DeviatedAsApprox(instance, flow, d, profile).pass,
              name + " deviated flow is not approximate");
    out.Check(VerifyApproxNash(instance, flow, profile.Scaled(beta)).pass,
              name + " fails eps = beta gamma");
    if (homogeneous) {
      DeviationProfile built = DeviationsFromApprox(instance, flow, beta);
      out.Check(VerifyDeviatedNash(instance, flow, built,
                                   SensitivityProfile::Uniform(instance, 1))
                    .pass,
                name + " round trip failed");
      ++round_trips;
    }
  }
  out.detail = std::to_string(round_trips) + " round trips";
  return out;
}

Outcome SeriesParallelStability() {
  Outcome out;
  Rng rng(1006);
  int applicable = 0;
  int empty_grids = 0;
  int backward = 0;
  uint64_t seed = 0;
  while (applicable < 500 && seed < 5000) {
    ++seed;
    RandomSpInstance sp =
        GenRandomSp(seed, 2 + static_cast<int>(seed % 3), LatencyFamily::kMixed);
    const GameInstance& instance = sp.instance;
    int paths = instance.num_strategies(0);
    if (paths > 8) continue;
    double eps = rng.Uniform(0.02, 0.6);
    SearchResult worst;
    try {
      worst = WorstApproxSearch(instance,
                                SensitivityProfile::Uniform(instance, eps),
                                {testing::GridFor(paths, 50000)});
    } catch (const PreconditionError&) {
      ++empty_grids;  // The grid holds no approximate flow to test.
      continue;
    }
    Flow z = ComputeNashFlow(instance);
    int q = ComputeAlternatingPath(instance, worst.flow, z).q;
    if (eps * q >= 1) continue;
    ++applicable;
    backward += q > 0;
    double bound = StabilityUpper(eps, q).value;
    out.Check(worst.report.ratio <= bound + 1e-9,
              "seed " + std::to_string(seed) + " ratio " +
                  Str(worst.report.ratio) + " > " + Str(bound));
  }
  out.Check(applicable >= 500,
            "only " + std::to_string(applicable) + " applicable instances");
  if (out.pass) {
    out.detail = std::to_string(applicable) + " instances (" +
                 std::to_string(backward) + " with q > 0), " +
                 std::to_string(empty_grids) + " without grid flows";
  }
  return out;
}

void CheckAlternating(Outcome& out, const GameInstance& instance,
                      const Flow& x, const Flow& z, const std::string& name) {
  std::vector<bool> z_arc, x_arc;
  oracle::ArcLabels(instance, x, z, z_arc, x_arc);
  int expected = oracle::MinAlternatingQ(*instance.graph(), z_arc, x_arc);
  try {
    int q = ComputeAlternatingPath(instance, x, z).q;
    out.Check(q == expected, name + " q " + std::to_string(q) +
                                 " vs exhaustive " + std::to_string(expected));
  } catch (const StructuralError&) {
    out.Check(expected < 0, name + " no path found, exhaustive " +
                                std::to_string(expected));
  }
}

Outcome AlternatingPathMinimal() {
  Outcome out;
  Construction braess = GenBraessSubcritical(5, 0.1);
  int q = ComputeAlternatingPath(braess.instance, braess.tested,
                                 braess.reference)
              .q;
  out.Check(q == 4, "m=5 gives q=" + std::to_string(q));
  for (const Construction& c : testing::GeneratorCorpus()) {
    if (!c.instance.graph() || !c.instance.SingleCommodity()) continue;
    if (c.instance.graph()->arcs.size() > 20) continue;
    CheckAlternating(out, c.instance, c.tested, c.reference, c.family);
  }
  Rng rng(1007);
  for (int c = 0; c < 300; ++c) {
    GameInstance instance =
        c % 2 ? testing::RandomNetwork(rng, rng.IntIn(4, 7), 20, 30,
                                       LatencyFamily::kMixed)
              : GenRandomSp(5000 + c, rng.IntIn(2, 4), LatencyFamily::kMixed)
                    .instance;
    if (instance.graph()->arcs.size() > 20) continue;
    Flow x = Flow::FromPathFlows(instance, testing::RandomPathFlows(rng, instance));
    CheckAlternating(out, instance, x, ComputeNashFlow(instance),
                     "random case " + std::to_string(c));
  }
  return out;
}

Outcome MatroidRatios() {
  Outcome out;
  for (int k = 2; k <= 6; ++k) {
    for (double scale : {0.1, 0.5, 0.9}) {
      double eps = scale / (k - 1);
      double expected = (1 + eps) / (1 - eps * (k - 1));
      Construction c = GenMatroidUnbounded(k, eps, expected);
      out.Check(VerifyApproxNash(c.instance, c.tested, eps).pass,
                "k=" + std::to_string(k) + " tested flow is not approximate");
      double ratio = MeasuredRatio(c.instance, c.tested);
      out.Check(RelClose(ratio, expected, 1e-9),
                "k=" + std::to_string(k) + " ratio " + Str(ratio));
    }
  }
  Rng rng(1008);
  for (int c = 0; c < 60; ++c) {
    UniformMatroidGame game = testing::RandomUniformMatroid(
        rng, rng.IntIn(3, 4), 2, LatencyFamily::kMixed);
    GameInstance bases = game.ToInstance();
    double eps = rng.Uniform(0.05, 0.9);
    SearchResult worst = WorstApproxSearch(
        bases, SensitivityProfile::Uniform(bases, eps),
        {testing::GridFor(bases.num_strategies(0), 100000)});
    double bound = (1 + eps) / (1 - eps);
    out.Check(worst.report.ratio <= bound + 1e-9,
              "2-uniform search ratio " + Str(worst.report.ratio));
  }
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
    std::string name = "game " + std::to_string(c);
    out.Check(VerifyMatroidDeviated(bases, x, edges, beta, 1.0).pass,
              name + " flow is not deviated Nash");
    double ratio = EmpiricalRatio(bases, x, z).ratio;
    out.Check(ratio <= 1 + beta + 1e-9,
              name + " ratio " + Str(ratio) + " > " + Str(1 + beta));
    ProofClaimsReport claims = CheckDeviationProofClaims(bases, x, z, beta);
    out.Check(claims.Holds(), name + " proof claims fail");
  }
  return out;
}

Outcome Telescoping() {
  Outcome out;
  Rng rng(1009);
  for (int c = 0; c < 100000; ++c) {
    int k = rng.IntIn(1, 12);
    std::vector<double> tau(k), weights(k);
    for (double& t : tau) t = rng.Uniform(0, 10);
    std::sort(tau.rbegin(), tau.rend());
    for (double& w : weights) w = rng.Bernoulli(0.1) ? 0 : rng.Uniform(0, 10);
    InequalitySides sides = TelescopingSides(tau, weights);
    bool holds = sides.lhs <= sides.rhs * (1 + 1e-12) + 1e-12;
    out.Check(holds, holds ? "" : "case " + std::to_string(c) + " lhs " +
                                      Str(sides.lhs) + " > rhs " +
                                      Str(sides.rhs));
  }
  return out;
}

Outcome DensityConvergence() {
  Outcome out;
  DensityFn uniform = DensityFn::Uniform(0, 1);
  double sr_limit = SrBoundContinuous(1, uniform).value;
  double dr_limit = DrBoundContinuous(1, uniform).value;
  out.Check(RelClose(sr_limit, 1.5, 1e-12), "continuous sr " + Str(sr_limit));
  out.Check(RelClose(dr_limit, 1.25, 1e-12), "continuous dr " + Str(dr_limit));
  double sr_gap = INFINITY, dr_gap = INFINITY;
  std::ostringstream summary;
  for (double width : {0.1, 0.01, 0.001}) {
    DiscreteClasses d = DiscretizeDensity(uniform, width, 0);
    double sr = SrBoundDiscrete(1, d.demand, d.sensitivity).value;
    double dr = DrBoundDiscrete(1, d.demand, d.sensitivity).value;
    double sr_next = std::abs(sr - 1.5), dr_next = std::abs(dr - 1.25);
    out.Check(sr_next <= 2 * width, "width " + Str(width) + " sr " + Str(sr));
    out.Check(dr_next <= 2 * width, "width " + Str(width) + " dr " + Str(dr));
    out.Check(sr_next <= sr_gap && dr_next <= dr_gap,
              "gap grew at width " + Str(width));
    sr_gap = sr_next;
    dr_gap = dr_next;
    summary << (width < 0.1 ? "; " : "") << "w=" << width << " sr=" << Str(sr)
            << " dr=" << Str(dr);
  }
  if (out.pass) out.detail = summary.str();
  return out;
}

void CheckSolver(Outcome& out, const GameInstance& instance,
                 const std::string& name) {
  NashResult fw = SolveNash(instance, {NashMethod::kFrankWolfe});
  out.Check(fw.relative_gap <= 1e-9,
            name + " gap " + Str(fw.relative_gap));
  out.Check(VerifyNash(instance, fw.flow).pass, name + " not certified");
  if (!IsParallelLinks(instance) || !instance.SingleCommodity()) return;
  NashResult exact = SolveNash(instance, {NashMethod::kParallelExact});
  double a = SocialCost(instance, fw.flow);
  double b = SocialCost(instance, exact.flow);
  out.Check(RelClose(a, b, 1e-8),
            name + " cost " + Str(a) + " vs exact " + Str(b));
  std::vector<LatencyFn> latencies;
  for (int e = 0; e < instance.num_resources(); ++e) {
    latencies.push_back(instance.latency(e));
  }
  double demand = 0;
  for (const SensitivityClass& c : instance.classes(0)) demand += c.demand;
  double expected = oracle::ParallelNashCost(latencies, demand);
  out.Check(RelClose(a, expected, 1e-8),
            name + " cost " + Str(a) + " vs oracle " + Str(expected));
}

Outcome SolverQuality() {
  Outcome out;
  for (const Construction& c : testing::GeneratorCorpus()) {
    CheckSolver(out, c.instance, c.family);
  }
  Rng rng(1011);
  for (int c = 0; c < 100; ++c) {
    CheckSolver(out,
                testing::RandomParallel(rng, rng.IntIn(2, 8),
                                        LatencyFamily::kMixed,
                                        rng.Uniform(0.5, 3)),
                "random parallel " + std::to_string(c));
  }
  for (int c = 0; c < 50; ++c) {
    CheckSolver(out,
                GenRandomSp(9000 + c, rng.IntIn(2, 5), LatencyFamily::kMixed)
                    .instance,
                "random sp " + std::to_string(c));
  }
  return out;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace wardrop

int main() {
  using namespace wardrop;
  const std::vector<Criterion> criteria = {
      {1, "braess subcritical ratios", 5, BraessSubcritical},
      {2, "braess supercritical divergence", 1, BraessSupercritical},
      {3, "parallel-link tightness", 5, ParallelTightness},
      {4, "deviation bound below stability bound", 1, MarkovDominance},
      {5, "deviated and approximate flows", 30, DeviationApproxLinks},
      {6, "series-parallel stability bound", 60, SeriesParallelStability},
      {7, "alternating path minimality", 30, AlternatingPathMinimal},
      {8, "matroid ratios", 60, MatroidRatios},
      {9, "telescoping inequality", 2, Telescoping},
      {10, "density discretization", 5, DensityConvergence},
      {11, "frank-wolfe solver quality", 60, SolverQuality},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::clock_t start = std::clock();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    double seconds =
        static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC;
    if (outcome.pass && seconds > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail = "over the " + Str(c.budget_seconds) + " s budget";
    }
    failures += !outcome.pass;
    std::printf("%s criterion %d: %s (%ld checks, %.3f s cpu)%s%s\n",
                outcome.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                outcome.checks, seconds, outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
