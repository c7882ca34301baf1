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

#include "families.h"

#include <map>
#include <sstream>

#include "wardrop/bounds/density.h"
#include "wardrop/bounds/formulas.h"
#include "wardrop/core/errors.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/parallel_families.h"
#include "wardrop/equilibria/ratio.h"
#include "wardrop/equilibria/search.h"
#include "wardrop/equilibria/verify.h"
#include "wardrop/graphs/alternating.h"
#include "wardrop/graphs/braess.h"
#include "wardrop/graphs/random_sp.h"
#include "wardrop/matroid/matroid.h"

namespace wardrop::cli {
namespace {

template <typename T>
T Require(const std::optional<T>& value, const char* name,
          const std::string& family) {
  if (!value) {
    throw InputError(family + " needs --" + std::string(name));
  }
  return *value;
}

DensityFn ParseDensity(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ':')) parts.push_back(part);
  auto number = [&](size_t i) {
    try {
      size_t used = 0;
      double value = std::stod(parts.at(i), &used);
      if (used != parts[i].size()) throw std::invalid_argument("");
      return value;
    } catch (const std::exception&) {
      throw InputError("bad density '" + text + "'");
    }
  };
  if (parts.size() == 3 && parts[0] == "uniform") {
    return DensityFn::Uniform(number(1), number(2));
  }
  if (parts.size() == 3 && parts[0] == "triangle") {
    return DensityFn::Triangle(number(1), number(2));
  }
  throw InputError("density must be uniform:LO:HI or triangle:CENTER:HALF");
}

std::string DensitySpec(const GenParams& p) {
  return p.density.value_or("uniform:0:1");
}

DiscreteClasses Discretize(const GenParams& p, DensityFn* density) {
  *density = ParseDensity(DensitySpec(p));
  density->RequireNormalized();
  return DiscretizeDensity(*density, p.eps_prime.value_or(0.01),
                           p.tail.value_or(0.0));
}

double DefaultBigM(int k, double eps) {
  if (eps < 1.0 / (k - 1)) return (1.0 + eps) / (1.0 - eps * (k - 1));
  return 100.0;
}

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const ConvergenceError*>(&e)) return 3;
  if (dynamic_cast<const InvariantError*>(&e)) return 4;
  return 2;
}

}  // namespace

const std::vector<std::string>& FamilyNames() {
  static const std::vector<std::string> names = {
      "braess-sub",        "braess-super", "two-arc-dr",
      "parallel-sr",       "matroid-unbounded", "random-sp",
      "density-discretize"};
  return names;
}

bool IsFamily(const std::string& family) {
  for (const std::string& name : FamilyNames()) {
    if (name == family) return true;
  }
  return false;
}

const std::vector<std::string>& FamilyParamNames(const std::string& family) {
  static const std::map<std::string, std::vector<std::string>> params = {
      {"braess-sub", {"m", "eps"}},
      {"braess-super", {"m", "eps", "tau"}},
      {"two-arc-dr", {"beta", "r", "gamma", "j", "eps_prime"}},
      {"parallel-sr", {"beta", "r", "gamma"}},
      {"matroid-unbounded", {"k", "eps", "big_m"}},
      {"random-sp", {"seed", "depth", "latency", "eps", "grid"}},
      {"density-discretize", {"density", "measure", "beta", "eps_prime", "tail"}},
  };
  auto it = params.find(family);
  if (it == params.end()) throw InputError("unknown family '" + family + "'");
  return it->second;
}

Construction BuildConstruction(const std::string& family, const GenParams& p,
                               const Tolerance& tol) {
  if (family == "braess-sub") {
    return GenBraessSubcritical(p.m.value_or(3), p.eps.value_or(0.25));
  }
  if (family == "braess-super") {
    return GenBraessSupercritical(p.m.value_or(3), p.eps.value_or(0.5),
                                  p.tau.value_or(1.0));
  }
  if (family == "two-arc-dr") {
    std::vector<double> r = Require(p.r, "r", family);
    std::vector<double> gamma = Require(p.gamma, "gamma", family);
    if (r.size() != gamma.size()) {
      throw InputError("--r and --gamma need the same length");
    }
    int j = p.j ? *p.j : WorstDeviationClass(r, gamma);
    return GenTwoArcDeviation(p.beta.value_or(1.0), r, gamma, j, p.eps_prime);
  }
  if (family == "parallel-sr") {
    std::vector<double> r = Require(p.r, "r", family);
    std::vector<double> gamma = Require(p.gamma, "gamma", family);
    if (r.size() != gamma.size()) {
      throw InputError("--r and --gamma need the same length");
    }
    return GenParallelStability(p.beta.value_or(1.0), r, gamma);
  }
  if (family == "matroid-unbounded") {
    int k = p.k.value_or(2);
    double eps = p.eps.value_or(0.5);
    if (k < 2) throw InputError("rank k must be at least 2");
    return GenMatroidUnbounded(k, eps, p.big_m.value_or(DefaultBigM(k, eps)));
  }
  if (family == "random-sp") {
    LatencyFamily latency = ParseLatencyFamily(p.latency.value_or("mixed"));
    RandomSpInstance random =
        GenRandomSp(p.seed.value_or(1), p.depth.value_or(3), latency);
    double eps = p.eps.value_or(0.1);
    if (!(eps >= 0.0)) throw InputError("eps must be nonnegative");
    Construction out;
    out.family = family;
    out.instance = random.instance;
    out.eps = SensitivityProfile::Uniform(out.instance, eps);
    SearchOptions options;
    options.grid = p.grid.value_or(20);
    SearchResult worst = WorstApproxSearch(out.instance, *out.eps, options, tol);
    out.tested = worst.flow;
    out.reference = ComputeNashFlow(out.instance);
    AlternatingPath path =
        ComputeAlternatingPath(out.instance, out.tested, out.reference, tol);
    out.bound = StabilityUpper(eps, path.q);
    out.expected_ratio = worst.report.ratio;
    return out;
  }
  if (family == "density-discretize") {
    DensityFn density;
    DiscreteClasses classes = Discretize(p, &density);
    double beta = p.beta.value_or(1.0);
    std::string measure = p.measure.value_or("sr");
    Construction out;
    if (measure == "sr") {
      out = GenParallelStability(beta, classes.demand, classes.sensitivity);
      out.bound = SrBoundContinuous(beta, density);
    } else if (measure == "dr") {
      int j = WorstDeviationClass(classes.demand, classes.sensitivity);
      out = GenTwoArcDeviation(beta, classes.demand, classes.sensitivity, j);
      out.bound = DrBoundContinuous(beta, density);
    } else {
      throw InputError("--measure must be sr or dr");
    }
    out.family = family;
    return out;
  }
  throw InputError("unknown family '" + family + "'");
}

Json ParamsToJson(const std::string& family, const GenParams& p) {
  Json out = Json::object();
  for (const std::string& name : FamilyParamNames(family)) {
    if (name == "m" && p.m) out[name] = *p.m;
    if (name == "k" && p.k) out[name] = *p.k;
    if (name == "j" && p.j) out[name] = *p.j;
    if (name == "depth" && p.depth) out[name] = *p.depth;
    if (name == "grid" && p.grid) out[name] = *p.grid;
    if (name == "seed" && p.seed) out[name] = *p.seed;
    if (name == "eps" && p.eps) out[name] = *p.eps;
    if (name == "beta" && p.beta) out[name] = *p.beta;
    if (name == "tau" && p.tau) out[name] = *p.tau;
    if (name == "eps_prime" && p.eps_prime) out[name] = *p.eps_prime;
    if (name == "big_m" && p.big_m) out[name] = *p.big_m;
    if (name == "tail" && p.tail) out[name] = *p.tail;
    if (name == "r" && p.r) out[name] = *p.r;
    if (name == "gamma" && p.gamma) out[name] = *p.gamma;
    if (name == "latency" && p.latency) out[name] = *p.latency;
    if (name == "density" && p.density) out[name] = *p.density;
    if (name == "measure" && p.measure) out[name] = *p.measure;
  }
  return out;
}

Json FamilyExtras(const std::string& family, const GenParams& p) {
  if (family != "density-discretize") return nullptr;
  DensityFn density;
  DiscreteClasses classes = Discretize(p, &density);
  double beta = p.beta.value_or(1.0);
  Json list = Json::array();
  for (size_t c = 0; c < classes.demand.size(); ++c) {
    list.push_back(
        {{"demand", classes.demand[c]}, {"gamma", classes.sensitivity[c]}});
  }
  return {{"classes", list},
          {"sr_continuous", BoundToJson(SrBoundContinuous(beta, density))},
          {"dr_continuous", BoundToJson(DrBoundContinuous(beta, density))},
          {"sr_discrete", BoundToJson(SrBoundDiscrete(beta, classes.demand,
                                                      classes.sensitivity))},
          {"dr_discrete", BoundToJson(DrBoundDiscrete(beta, classes.demand,
                                                      classes.sensitivity))}};
}

RowOutcome EvaluateFamily(const std::string& family, const GenParams& params,
                          const Tolerance& tol) {
  RowOutcome row;
  try {
    Construction c = BuildConstruction(family, params, tol);
    Flow reference = ComputeNashFlow(c.instance);
    bool verified = VerifyNash(c.instance, reference, tol).pass;
    if (c.eps) {
      verified = verified &&
                 VerifyApproxNash(c.instance, c.tested, *c.eps, tol).pass;
    }
    if (c.deviations) {
      verified = verified &&
                 VerifyDeviatedNash(c.instance, c.tested, *c.deviations,
                                    SensitivityProfile::FromInstance(c.instance),
                                    tol)
                     .pass;
    }
    row.ratio = EmpiricalRatio(c.instance, c.tested, reference, c.bound, tol)
                    .ratio;
    row.bound = c.bound;
    if (c.instance.graph() && c.instance.SingleCommodity()) {
      row.q = ComputeAlternatingPath(c.instance, c.tested, reference, tol).q;
    }
    if (!verified) {
      row.status = "unverified";
      row.exit_code = 4;
    } else if (!row.bound.infinite &&
               !tol.LessOrEqual(row.ratio, row.bound.value)) {
      row.status = "bound-violated";
      row.exit_code = 4;
    } else {
      row.status = "ok";
    }
  } catch (const Error& e) {
    row.status = std::string("error: ") + e.what();
    row.exit_code = ExitCodeFor(e);
  }
  return row;
}

}  // namespace wardrop::cli
