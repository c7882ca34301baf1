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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "wardrop/core/errors.h"

namespace {

using wardrop::cli::GenParams;

// Options shared by gen (typed) and sweep (raw ranges).
struct RawParams {
  std::string m, k, j, depth, grid, seed, eps, beta, tau, eps_prime, big_m,
      tail, r, gamma, latency, density, measure;
};

void AddRawOptions(CLI::App* app, RawParams& raw) {
  app->add_option("--m", raw.m, "Braess size m (2m nodes)");
  app->add_option("--k", raw.k, "Matroid rank");
  app->add_option("--j", raw.j, "Two-arc class index, 1-based");
  app->add_option("--depth", raw.depth, "Random series-parallel depth");
  app->add_option("--grid", raw.grid, "Grid points per unit demand");
  app->add_option("--seed", raw.seed, "Random seed");
  app->add_option("--eps", raw.eps, "Approximation factor");
  app->add_option("--beta", raw.beta, "Deviation bound");
  app->add_option("--tau", raw.tau, "Braess supercritical parameter");
  app->add_option("--eps-prime", raw.eps_prime,
                  "Two-arc start offset; discretization width");
  app->add_option("--big-m", raw.big_m, "Matroid latency at full load");
  app->add_option("--tail", raw.tail, "Discretization tail mass");
  app->add_option("--r", raw.r, "Class demands, comma-separated");
  app->add_option("--gamma", raw.gamma, "Class sensitivities, comma-separated");
  app->add_option("--latency", raw.latency,
                  "Random latency family: affine, poly, pwl, mixed");
  app->add_option("--density", raw.density,
                  "uniform:LO:HI or triangle:CENTER:HALF");
  app->add_option("--measure", raw.measure,
                  "Discretized density realized as sr or dr construction");
}

double ToReal(const std::string& text) {
  std::vector<double> values = wardrop::cli::ParseNumberList(text);
  if (values.size() != 1) {
    throw wardrop::InputError("expected one number, got '" + text + "'");
  }
  return values.front();
}

int ToInt(const std::string& text) {
  double value = ToReal(text);
  if (value != static_cast<int>(value)) {
    throw wardrop::InputError("expected an integer, got '" + text + "'");
  }
  return static_cast<int>(value);
}

GenParams ToGenParams(const RawParams& raw) {
  GenParams p;
  if (!raw.m.empty()) p.m = ToInt(raw.m);
  if (!raw.k.empty()) p.k = ToInt(raw.k);
  if (!raw.j.empty()) p.j = ToInt(raw.j);
  if (!raw.depth.empty()) p.depth = ToInt(raw.depth);
  if (!raw.grid.empty()) p.grid = ToInt(raw.grid);
  if (!raw.seed.empty()) {
    try {
      size_t used = 0;
      p.seed = std::stoull(raw.seed, &used);
      if (used != raw.seed.size()) throw std::invalid_argument(raw.seed);
    } catch (const std::exception&) {
      throw wardrop::InputError("--seed takes a nonnegative integer");
    }
  }
  if (!raw.eps.empty()) p.eps = ToReal(raw.eps);
  if (!raw.beta.empty()) p.beta = ToReal(raw.beta);
  if (!raw.tau.empty()) p.tau = ToReal(raw.tau);
  if (!raw.eps_prime.empty()) p.eps_prime = ToReal(raw.eps_prime);
  if (!raw.big_m.empty()) p.big_m = ToReal(raw.big_m);
  if (!raw.tail.empty()) p.tail = ToReal(raw.tail);
  if (!raw.r.empty()) p.r = wardrop::cli::ParseNumberList(raw.r);
  if (!raw.gamma.empty()) p.gamma = wardrop::cli::ParseNumberList(raw.gamma);
  if (!raw.latency.empty()) p.latency = raw.latency;
  if (!raw.density.empty()) p.density = raw.density;
  if (!raw.measure.empty()) p.measure = raw.measure;
  return p;
}

std::map<std::string, std::string> ToRanges(const RawParams& raw) {
  std::map<std::string, std::string> out;
  auto put = [&](const char* name, const std::string& value) {
    if (!value.empty()) out[name] = value;
  };
  put("m", raw.m);
  put("k", raw.k);
  put("j", raw.j);
  put("depth", raw.depth);
  put("grid", raw.grid);
  put("seed", raw.seed);
  put("eps", raw.eps);
  put("beta", raw.beta);
  put("tau", raw.tau);
  put("eps_prime", raw.eps_prime);
  put("big_m", raw.big_m);
  put("tail", raw.tail);
  put("r", raw.r);
  put("gamma", raw.gamma);
  put("latency", raw.latency);
  put("density", raw.density);
  put("measure", raw.measure);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria, deviations and inefficiency bounds for "
               "nonatomic congestion games"};
  app.require_subcommand(1);

  std::string family;
  std::string out_path;
  std::string format = "json";
  RawParams gen_raw;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance family");
  gen->add_option("family", family, "Family name")->required();
  AddRawOptions(gen, gen_raw);
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--format", format, "Output format (json)");

  wardrop::cli::AnalyzeOptions analyze_options;
  std::string analyze_eps, analyze_beta, analyze_gamma;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Solve, verify and bound an instance and optional flow");
  analyze->add_option("--instance", analyze_options.instance_path,
                      "Instance, generated bundle or matroid game")
      ->required();
  analyze->add_option("--flow", analyze_options.flow_path,
                      "Flow records or generated bundle");
  analyze->add_option("--eps", analyze_eps, "Approximation factor to verify");
  analyze->add_option("--beta", analyze_beta, "Deviation bound");
  analyze->add_option("--gamma", analyze_gamma, "Common sensitivity");
  analyze->add_option("--out", analyze_options.out_path, "Output file");
  analyze->add_option("--format", format, "Output format (json)");

  wardrop::cli::SweepOptions sweep_options;
  RawParams sweep_raw;
  bool no_timing = false;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Measure a family over parameter ranges");
  sweep->add_option("family", sweep_options.family, "Family name")->required();
  AddRawOptions(sweep, sweep_raw);
  sweep->add_option("--jobs", sweep_options.jobs, "Rows evaluated in parallel");
  sweep->add_option("--out", sweep_options.out_path, "Output file");
  sweep->add_option("--format", sweep_options.format, "csv or json");
  sweep->add_flag("--no-timing", no_timing,
                  "Leave runtime_ms empty for byte-identical output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : wardrop::cli::kExitInput;
  }

  const wardrop::Tolerance tol = wardrop::Tolerance::FromEnvironment();
  try {
    if (gen->parsed()) {
      if (format != "json") {
        throw wardrop::InputError("gen writes json only");
      }
      if (!wardrop::cli::IsFamily(family)) {
        throw wardrop::InputError("unknown family '" + family + "'");
      }
      return wardrop::cli::RunGen(family, ToGenParams(gen_raw), out_path, tol,
                                  std::cout, std::cerr);
    }
    if (analyze->parsed()) {
      if (format != "json") {
        throw wardrop::InputError("analyze writes json only");
      }
      if (!analyze_eps.empty()) analyze_options.eps = ToReal(analyze_eps);
      if (!analyze_beta.empty()) analyze_options.beta = ToReal(analyze_beta);
      if (!analyze_gamma.empty()) analyze_options.gamma = ToReal(analyze_gamma);
      return wardrop::cli::RunAnalyze(analyze_options, tol, std::cout,
                                      std::cerr);
    }
    if (!wardrop::cli::IsFamily(sweep_options.family)) {
      throw wardrop::InputError("unknown family '" + sweep_options.family +
                                "'");
    }
    sweep_options.ranges = ToRanges(sweep_raw);
    sweep_options.timing = !no_timing;
    return wardrop::cli::RunSweep(sweep_options, tol, std::cout, std::cerr);
  } catch (const wardrop::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return wardrop::cli::kExitConvergence;
  } catch (const wardrop::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return wardrop::cli::kExitInvariant;
  } catch (const wardrop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return wardrop::cli::kExitInput;
  }
}
