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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>
#include <tuple>

#include "wardrop/bounds/formulas.h"
#include "wardrop/core/errors.h"
#include "wardrop/core/evaluation.h"
#include "wardrop/equilibria/nash.h"
#include "wardrop/equilibria/verify.h"
#include "wardrop/graphs/alternating.h"
#include "wardrop/io/json.h"

namespace wardrop::cli {
namespace {

std::vector<std::string> Split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string part;
  std::stringstream in(text);
  while (std::getline(in, part, separator)) parts.push_back(part);
  if (!text.empty() && text.back() == separator) parts.push_back("");
  return parts;
}

double ParseNumber(const std::string& text) {
  try {
    size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputError("'" + text + "' is not a number");
  }
}

std::string FormatNumber(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeInputs {
  GameInstance instance;
  std::optional<Flow> tested;
  std::optional<SensitivityProfile> eps;
  std::optional<DeviationProfile> deviations;
  std::optional<BoundValue> bound;
  bool matroid = false;
  std::vector<EdgeDeviation> edge_deviations;
  std::optional<double> matroid_beta;
};

AnalyzeInputs LoadInputs(const AnalyzeOptions& options) {
  AnalyzeInputs in;
  Json json = ReadJsonFile(options.instance_path);
  if (json.is_object() && json.contains("instance")) {
    Construction c = ConstructionFromJson(json);
    in.instance = c.instance;
    in.tested = c.tested;
    in.eps = c.eps;
    in.deviations = c.deviations;
    in.bound = c.bound;
  } else if (json.is_object() && json.contains("ground_set")) {
    MatroidGameFile file = MatroidGameFromJson(json);
    in.instance = file.game.ToInstance();
    in.matroid = true;
    in.edge_deviations = file.edge_deviations;
    in.matroid_beta = file.beta;
  } else {
    in.instance = InstanceFromJson(json);
  }
  if (!options.flow_path.empty()) {
    Json flow = ReadJsonFile(options.flow_path);
    if (flow.is_object() && flow.contains("flows")) {
      flow = flow["flows"].at("tested");
    }
    in.tested = FlowFromJson(in.instance, flow);
  }
  if (options.eps) {
    in.eps = SensitivityProfile::Uniform(in.instance, *options.eps);
  }
  return in;
}

double LargestEps(const SensitivityProfile& eps) {
  double largest = 0.0;
  for (int i = 0; i < eps.num_commodities(); ++i) {
    for (const SensitivityClass& c : eps.classes(i)) {
      largest = std::max(largest, c.sensitivity);
    }
  }
  return largest;
}

}  // namespace

std::vector<double> ParseNumberList(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : Split(text, ',')) {
    out.push_back(ParseNumber(part));
  }
  if (out.empty()) throw InputError("empty number list");
  return out;
}

int RunGen(const std::string& family, const GenParams& params,
           const std::string& out_path, const Tolerance& tol,
           std::ostream& out, std::ostream& err) {
  Construction c = BuildConstruction(family, params, tol);
  Json bundle = ConstructionToJson(c, ParamsToJson(family, params));
  Json extras = FamilyExtras(family, params);
  if (!extras.is_null()) bundle["discretization"] = extras;
  Emit(DumpJson(bundle), out_path, out);
  std::ostream& echo = out_path.empty() ? err : out;
  echo << "bound " << c.bound.name << " = "
       << (c.bound.infinite ? std::string("inf") : FormatNumber(c.bound.value))
       << "\n";
  return kExitOk;
}

int RunAnalyze(const AnalyzeOptions& options, const Tolerance& tol,
               std::ostream& out, std::ostream& err) {
  AnalyzeInputs in = LoadInputs(options);
  const GameInstance& instance = in.instance;
  RequireValidInstance(instance, tol);
  int exit_code = kExitOk;

  Json report = Json::object();
  report["instance"] = {{"resources", instance.num_resources()},
                        {"commodities", instance.num_commodities()},
                        {"network", instance.graph().has_value()}};

  NashResult nash = SolveNash(instance);
  double nash_cost = SocialCost(instance, nash.flow, tol);
  report["nash"] = {
      {"method", NashMethodName(nash.method)},
      {"iterations", nash.iterations},
      {"relative_gap", nash.relative_gap},
      {"cost", nash_cost},
      {"flow", FlowToJson(instance, nash.flow)},
      {"certificate",
       CertificateToJson(instance, VerifyNash(instance, nash.flow, tol))}};

  Json bounds = Json::array();
  if (in.bound) bounds.push_back(BoundToJson(*in.bound));

  if (in.tested) {
    const Flow& tested = *in.tested;
    std::vector<std::string> infeasible =
        FeasibilityViolations(instance, tested, tol);
    if (!infeasible.empty()) {
      throw InputError("supplied flow is infeasible: " + infeasible.front());
    }
    Json flow = {{"cost", SocialCost(instance, tested, tol)}};
    bool approx_pass = false;
    if (in.eps) {
      EquilibriumCertificate cert =
          VerifyApproxNash(instance, tested, *in.eps, tol);
      approx_pass = cert.pass;
      flow["approx"] = CertificateToJson(instance, cert);
      bool homogeneous = instance.SingleCommodity() &&
                         instance.num_classes(0) == 1 && in.eps->Homogeneous();
      if (cert.pass && homogeneous) {
        double eps = in.eps->sensitivity(0, 0);
        double gamma = options.gamma.value_or(1.0);
        DeviationProfile constructed =
            DeviationsFromApprox(instance, tested, eps, gamma, tol);
        EquilibriumCertificate back = VerifyDeviatedNash(
            instance, tested, constructed,
            SensitivityProfile::Uniform(instance, gamma), tol);
        flow["constructed_deviations"] = {
            {"deviations", DeviationsToJson(instance, constructed)},
            {"certificate", CertificateToJson(instance, back)}};
        if (!back.pass) exit_code = kExitInvariant;
      }
    }
    if (in.deviations) {
      SensitivityProfile gamma = SensitivityProfile::FromInstance(instance);
      EquilibriumCertificate cert =
          VerifyDeviatedNash(instance, tested, *in.deviations, gamma, tol);
      flow["deviated"] = CertificateToJson(instance, cert);
      EquilibriumCertificate implied =
          DeviatedAsApprox(instance, tested, *in.deviations, gamma, tol);
      flow["deviated_as_approx"] = CertificateToJson(instance, implied);
      if (cert.pass && !implied.pass) exit_code = kExitInvariant;
    }
    if (in.matroid && !in.edge_deviations.empty()) {
      double beta = options.beta.value_or(in.matroid_beta.value_or(0.0));
      EquilibriumCertificate cert = VerifyMatroidDeviated(
          instance, tested, in.edge_deviations, beta,
          options.gamma.value_or(1.0), BasisComparison::kSingleSwap,
          /*cross_check=*/true, tol);
      flow["deviated"] = CertificateToJson(instance, cert);
      if (cert.pass) {
        BoundValue bound = MatroidDrBound(beta);
        bounds.push_back(BoundToJson(bound));
        ProofClaimsReport claims =
            CheckDeviationProofClaims(instance, tested, nash.flow, beta, tol);
        flow["deviation_claims"] = {
            {"pointwise_holds", claims.pointwise_holds},
            {"pointwise_margin", claims.pointwise_margin},
            {"exchange_lhs", claims.exchange_lhs},
            {"exchange_rhs", claims.exchange_rhs},
            {"exchange_holds", claims.exchange_holds}};
        if (!claims.Holds()) exit_code = kExitInvariant;
      }
    }
    report["flow"] = flow;

    RatioReport ratio = EmpiricalRatio(instance, tested, nash.flow, in.bound,
                                       tol);
    report["ratio"] = RatioToJson(ratio);

    if (instance.graph() && instance.SingleCommodity()) {
      try {
        AlternatingPath path =
            ComputeAlternatingPath(instance, tested, nash.flow, tol);
        report["alternating_path"] = AlternatingPathToJson(instance, path);
        if (in.eps) {
          double eps = LargestEps(*in.eps);
          BoundValue bound = StabilityUpper(eps, path.q);
          bool applicable = approx_pass;
          bool holds = bound.infinite ||
                       tol.LessOrEqual(ratio.ratio, bound.value);
          report["stability_bound"] = {{"eps", eps},
                                       {"q", path.q},
                                       {"bound", BoundToJson(bound)},
                                       {"ratio", ratio.ratio},
                                       {"applicable", applicable},
                                       {"holds", holds}};
          bounds.push_back(BoundToJson(bound));
          int nodes = static_cast<int>(instance.graph()->nodes.size());
          BoundValue by_nodes = StabilityUpperByNodes(eps, nodes);
          if (!by_nodes.infinite) bounds.push_back(BoundToJson(by_nodes));
          if (applicable && !holds) exit_code = kExitInvariant;
        }
      } catch (const StructuralError& e) {
        report["alternating_path"] = {{"error", e.what()}};
      }
    }
  }

  if (options.beta && !in.matroid) {
    for (int i = 0; i < instance.num_commodities(); ++i) {
      std::vector<double> r, gamma;
      for (const SensitivityClass& c : instance.classes(i)) {
        r.push_back(c.demand);
        gamma.push_back(c.sensitivity);
      }
      bounds.push_back(BoundToJson(SrBoundDiscrete(*options.beta, r, gamma)));
      bounds.push_back(BoundToJson(DrBoundDiscrete(*options.beta, r, gamma)));
    }
  }
  report["bounds"] = bounds;
  Emit(DumpJson(report), options.out_path, out);
  if (exit_code != kExitOk) {
    err << "invariant violation detected; see the report\n";
  }
  return exit_code;
}

// --- sweep -----------------------------------------------------------------

namespace {

enum class ParamType { kInt, kReal, kList, kText };

ParamType TypeOf(const std::string& name) {
  if (name == "m" || name == "k" || name == "j" || name == "depth" ||
      name == "grid" || name == "seed") {
    return ParamType::kInt;
  }
  if (name == "r" || name == "gamma") return ParamType::kList;
  if (name == "latency" || name == "density" || name == "measure") {
    return ParamType::kText;
  }
  return ParamType::kReal;
}

struct Alternative {
  bool automatic = false;
  std::vector<double> numbers;
  std::string text;

  bool operator<(const Alternative& other) const {
    return std::tie(automatic, numbers, text) <
           std::tie(other.automatic, other.numbers, other.text);
  }
  bool operator==(const Alternative& other) const {
    return automatic == other.automatic && numbers == other.numbers &&
           text == other.text;
  }
};

std::vector<double> Progression(const std::string& text) {
  std::vector<std::string> parts = Split(text, ':');
  if (parts.size() != 3) {
    throw InputError("progression '" + text + "' must be START:STEP:STOP");
  }
  double start = ParseNumber(parts[0]);
  double step = ParseNumber(parts[1]);
  double stop = ParseNumber(parts[2]);
  if (!(step > 0.0) || stop < start) {
    throw InputError("progression '" + text +
                     "' needs a positive step and STOP >= START");
  }
  double count = std::floor((stop - start) / step + 1e-9);
  if (count > 1e6) throw RefusalError("progression '" + text + "' too long");
  std::vector<double> out;
  for (long n = 0; n <= static_cast<long>(count); ++n) {
    out.push_back(start + n * step);
  }
  return out;
}

std::vector<Alternative> ParseRange(const std::string& name,
                                    const std::string& text) {
  std::vector<Alternative> out;
  ParamType type = TypeOf(name);
  if (type == ParamType::kList) {
    for (const std::string& part : Split(text, ';')) {
      out.push_back({false, ParseNumberList(part), ""});
    }
  } else if (type == ParamType::kText) {
    for (const std::string& part : Split(text, ',')) {
      if (part.empty()) throw InputError("empty value for --" + name);
      out.push_back({false, {}, part});
    }
  } else {
    for (const std::string& part : Split(text, ',')) {
      std::vector<double> values =
          part.find(':') == std::string::npos
              ? std::vector<double>{ParseNumber(part)}
              : Progression(part);
      for (double v : values) {
        if (type == ParamType::kInt &&
            (v != std::floor(v) || v < 0.0 || v > 9e15)) {
          throw InputError("--" + name + " takes nonnegative integers");
        }
        out.push_back({false, {v}, ""});
      }
    }
  }
  if (out.empty()) throw InputError("empty range for --" + name);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Assign(GenParams& p, const std::string& name, const Alternative& a) {
  if (a.automatic) return;
  double v = a.numbers.empty() ? 0.0 : a.numbers.front();
  if (name == "m") p.m = static_cast<int>(v);
  if (name == "k") p.k = static_cast<int>(v);
  if (name == "j") p.j = static_cast<int>(v);
  if (name == "depth") p.depth = static_cast<int>(v);
  if (name == "grid") p.grid = static_cast<int>(v);
  if (name == "seed") p.seed = static_cast<uint64_t>(v);
  if (name == "eps") p.eps = v;
  if (name == "beta") p.beta = v;
  if (name == "tau") p.tau = v;
  if (name == "eps_prime") p.eps_prime = v;
  if (name == "big_m") p.big_m = v;
  if (name == "tail") p.tail = v;
  if (name == "r") p.r = a.numbers;
  if (name == "gamma") p.gamma = a.numbers;
  if (name == "latency") p.latency = a.text;
  if (name == "density") p.density = a.text;
  if (name == "measure") p.measure = a.text;
}

std::string Cell(const Alternative& a) {
  if (a.automatic) return "auto";
  if (!a.text.empty()) return a.text;
  std::string out;
  for (size_t i = 0; i < a.numbers.size(); ++i) {
    if (i > 0) out += ';';
    out += FormatNumber(a.numbers[i]);
  }
  return out;
}

std::string CsvEscape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct SweepRow {
  std::vector<Alternative> params;
  RowOutcome outcome;
  double runtime_ms = 0.0;
};

}  // namespace

int RunSweep(const SweepOptions& options, const Tolerance& tol,
             std::ostream& out, std::ostream& err) {
  const std::vector<std::string>& names = FamilyParamNames(options.family);
  for (const auto& [name, range] : options.ranges) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw InputError("family " + options.family + " has no parameter '" +
                       name + "'");
    }
  }
  if (options.jobs < 1) throw InputError("--jobs must be at least 1");
  if (options.format != "csv" && options.format != "json") {
    throw InputError("--format must be csv or json");
  }

  std::vector<std::vector<Alternative>> ranges;
  for (const std::string& name : names) {
    auto it = options.ranges.find(name);
    if (it == options.ranges.end()) {
      ranges.push_back({Alternative{true, {}, ""}});
    } else {
      ranges.push_back(ParseRange(name, it->second));
    }
  }

  // Odometer over the ranges, last parameter fastest: lexicographic order.
  std::vector<SweepRow> rows;
  std::vector<size_t> digit(ranges.size(), 0);
  while (true) {
    SweepRow row;
    for (size_t p = 0; p < ranges.size(); ++p) {
      row.params.push_back(ranges[p][digit[p]]);
    }
    rows.push_back(std::move(row));
    if (rows.size() > 1000000) throw RefusalError("sweep exceeds 10^6 rows");
    size_t p = ranges.size();
    while (p > 0) {
      --p;
      if (++digit[p] < ranges[p].size()) break;
      digit[p] = 0;
      if (p == 0) goto done;
    }
    if (ranges.empty()) break;
  }
done:

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t r = next++; r < rows.size(); r = next++) {
      GenParams params;
      for (size_t p = 0; p < names.size(); ++p) {
        Assign(params, names[p], rows[r].params[p]);
      }
      auto start = std::chrono::steady_clock::now();
      rows[r].outcome = EvaluateFamily(options.family, params, tol);
      rows[r].runtime_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }
  };
  int jobs = std::min<int>(options.jobs, static_cast<int>(rows.size()));
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  std::string text;
  Json json_rows = Json::array();
  if (options.format == "csv") {
    text += "family";
    for (const std::string& name : names) text += "," + name;
    text += ",ratio,bound,gap,q,status,runtime_ms\n";
  }
  int failures = 0;
  int first_failure = kExitOk;
  for (const SweepRow& row : rows) {
    const RowOutcome& o = row.outcome;
    bool failed = o.exit_code != 0;
    if (failed) {
      ++failures;
      if (first_failure == kExitOk) first_failure = o.exit_code;
    }
    bool measured = o.status.rfind("error", 0) != 0;
    double bound = o.bound.infinite ? INFINITY : o.bound.value;
    std::string ratio = measured ? FormatNumber(o.ratio) : "";
    std::string bound_cell = measured ? FormatNumber(bound) : "";
    std::string gap = measured ? FormatNumber(bound - o.ratio) : "";
    std::string q = o.q ? std::to_string(*o.q) : "";
    std::string runtime = options.timing ? FormatNumber(
                                               std::round(row.runtime_ms * 1000) /
                                               1000)
                                         : "";
    if (options.format == "csv") {
      text += options.family;
      for (const Alternative& a : row.params) text += "," + CsvEscape(Cell(a));
      text += "," + ratio + "," + bound_cell + "," + gap + "," + q + "," +
              CsvEscape(o.status) + "," + runtime + "\n";
    } else {
      Json item = {{"family", options.family}};
      for (size_t p = 0; p < names.size(); ++p) {
        item[names[p]] = Cell(row.params[p]);
      }
      item["ratio"] = measured ? Json(o.ratio) : Json(nullptr);
      item["bound"] = measured ? BoundToJson(o.bound) : Json(nullptr);
      item["gap"] = measured ? Json(bound - o.ratio) : Json(nullptr);
      item["q"] = o.q ? Json(*o.q) : Json(nullptr);
      item["status"] = o.status;
      item["runtime_ms"] = options.timing ? Json(row.runtime_ms) : Json(nullptr);
      json_rows.push_back(std::move(item));
    }
  }
  if (options.format == "json") text = DumpJson(json_rows);
  Emit(text, options.out_path, out);
  if (failures > 0) {
    err << failures << " of " << rows.size() << " rows failed\n";
  }
  return failures == static_cast<int>(rows.size()) ? first_failure : kExitOk;
}

}  // namespace wardrop::cli
