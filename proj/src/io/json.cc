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

#include "wardrop/io/json.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wardrop/core/errors.h"

namespace wardrop {
namespace {

void Indent(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out += '\n';
  out.append(static_cast<size_t>(indent * depth), ' ');
}

void Write(const Json& value, int indent, int depth, std::string& out) {
  switch (value.type()) {
    case Json::value_t::number_float: {
      double x = value.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.17g", x);
      out += buffer;
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const Json& item : value) {
        if (!first) out += ',';
        first = false;
        Indent(out, indent, depth + 1);
        Write(item, indent, depth + 1, out);
      }
      Indent(out, indent, depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ',';
        first = false;
        Indent(out, indent, depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        Write(it.value(), indent, depth + 1, out);
      }
      Indent(out, indent, depth);
      out += '}';
      return;
    }
    default:
      out += value.dump();
  }
}

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object()) throw InputError("expected a JSON object");
  auto it = json.find(key);
  if (it == json.end()) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return *it;
}

double Number(const Json& json, const char* what) {
  if (!json.is_number()) {
    throw InputError(std::string("field '") + what + "' must be a number");
  }
  return json.get<double>();
}

double NumberField(const Json& json, const char* key) {
  return Number(Field(json, key), key);
}

std::string StringField(const Json& json, const char* key) {
  const Json& value = Field(json, key);
  if (!value.is_string()) {
    throw InputError(std::string("field '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

int IntField(const Json& json, const char* key) {
  const Json& value = Field(json, key);
  if (!value.is_number_integer()) {
    throw InputError(std::string("field '") + key + "' must be an integer");
  }
  return value.get<int>();
}

const Json& ArrayField(const Json& json, const char* key) {
  const Json& value = Field(json, key);
  if (!value.is_array()) {
    throw InputError(std::string("field '") + key + "' must be an array");
  }
  return value;
}

std::vector<double> Numbers(const Json& json, const char* what) {
  if (!json.is_array()) {
    throw InputError(std::string("field '") + what + "' must be an array");
  }
  std::vector<double> out;
  for (const Json& item : json) out.push_back(Number(item, what));
  return out;
}

std::vector<std::string> Strings(const Json& json, const char* what) {
  if (!json.is_array()) {
    throw InputError(std::string("field '") + what + "' must be an array");
  }
  std::vector<std::string> out;
  for (const Json& item : json) {
    if (!item.is_string()) {
      throw InputError(std::string("entries of '") + what +
                       "' must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Json Ids(const GameInstance& instance, int commodity, int strategy) {
  if (strategy < 0) return nullptr;
  return instance.commodities()[commodity].strategies[strategy];
}

Json ClassesToJson(const std::vector<SensitivityClass>& classes) {
  Json out = Json::array();
  for (const SensitivityClass& c : classes) {
    out.push_back({{"demand", c.demand}, {"gamma", c.sensitivity}});
  }
  return out;
}

std::vector<SensitivityClass> ClassesFromJson(const Json& json) {
  if (!json.is_array()) throw InputError("classes must be an array");
  std::vector<SensitivityClass> out;
  for (const Json& c : json) {
    out.push_back({NumberField(c, "demand"), NumberField(c, "gamma")});
  }
  return out;
}

}  // namespace

std::string DumpJson(const Json& value, int indent) {
  std::string out;
  Write(value, indent, 0, out);
  if (indent >= 0) out += '\n';
  return out;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJson(buffer.str());
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

Json LatencyToJson(const LatencyFn& fn) {
  const std::vector<double>& c = fn.coefficients();
  switch (fn.kind()) {
    case LatencyKind::kConstant:
      return {{"kind", "constant"}, {"value", c.at(0)}};
    case LatencyKind::kAffine:
      return {{"kind", "affine"}, {"intercept", c.at(0)}, {"slope", c.at(1)}};
    case LatencyKind::kPolynomial:
      return {{"kind", "poly"}, {"coefficients", c}};
    case LatencyKind::kPiecewiseLinear: {
      Json points = Json::array();
      for (const Breakpoint& p : fn.breakpoints()) {
        points.push_back({p.load, p.value});
      }
      return {{"kind", "pwl"},
              {"breakpoints", points},
              {"final_slope", fn.final_slope()}};
    }
  }
  throw InvariantError("unknown latency kind");
}

LatencyFn LatencyFromJson(const Json& json) {
  std::string kind = StringField(json, "kind");
  if (kind == "constant") return LatencyFn::Constant(NumberField(json, "value"));
  if (kind == "affine") {
    return LatencyFn::Affine(NumberField(json, "intercept"),
                             NumberField(json, "slope"));
  }
  if (kind == "poly") {
    std::vector<double> c = Numbers(Field(json, "coefficients"), "coefficients");
    if (c.empty()) throw InputError("a polynomial needs coefficients");
    return LatencyFn::Polynomial(std::move(c));
  }
  if (kind == "pwl") {
    std::vector<Breakpoint> points;
    for (const Json& p : ArrayField(json, "breakpoints")) {
      std::vector<double> pair = Numbers(p, "breakpoints");
      if (pair.size() != 2) {
        throw InputError("breakpoints must be [load, value] pairs");
      }
      points.push_back({pair[0], pair[1]});
    }
    if (points.empty()) throw InputError("pwl latency needs breakpoints");
    return LatencyFn::PiecewiseLinear(std::move(points),
                                      NumberField(json, "final_slope"));
  }
  throw InputError("unknown latency kind '" + kind + "'");
}

Json GraphToJson(const NetworkAnnotation& graph) {
  Json arcs = Json::array();
  for (const Arc& arc : graph.arcs) {
    arcs.push_back({{"id", arc.id}, {"tail", arc.tail}, {"head", arc.head}});
  }
  return {{"nodes", graph.nodes},
          {"arcs", arcs},
          {"source", graph.source},
          {"sink", graph.sink}};
}

NetworkAnnotation GraphFromJson(const Json& json) {
  NetworkAnnotation graph;
  graph.nodes = Strings(Field(json, "nodes"), "nodes");
  for (const Json& arc : ArrayField(json, "arcs")) {
    graph.arcs.push_back({StringField(arc, "id"), StringField(arc, "tail"),
                          StringField(arc, "head")});
  }
  graph.source = StringField(json, "source");
  graph.sink = StringField(json, "sink");
  return graph;
}

Json InstanceToJson(const GameInstance& instance) {
  Json resources = Json::array();
  for (const Resource& r : instance.resources()) {
    resources.push_back({{"id", r.id}, {"latency", LatencyToJson(r.latency)}});
  }
  Json commodities = Json::array();
  for (const Commodity& c : instance.commodities()) {
    Json item = {{"demand", c.demand}, {"strategies", c.strategies}};
    if (!c.classes.empty()) item["classes"] = ClassesToJson(c.classes);
    commodities.push_back(std::move(item));
  }
  Json out = {{"resources", resources}, {"commodities", commodities}};
  if (instance.graph()) out["graph"] = GraphToJson(*instance.graph());
  return out;
}

GameInstance InstanceFromJson(const Json& json) {
  std::vector<Resource> resources;
  for (const Json& r : ArrayField(json, "resources")) {
    resources.push_back(
        {StringField(r, "id"), LatencyFromJson(Field(r, "latency"))});
  }
  std::vector<Commodity> commodities;
  for (const Json& c : ArrayField(json, "commodities")) {
    Commodity commodity;
    commodity.demand = NumberField(c, "demand");
    for (const Json& s : ArrayField(c, "strategies")) {
      commodity.strategies.push_back(Strings(s, "strategies"));
    }
    if (c.contains("classes")) {
      commodity.classes = ClassesFromJson(c["classes"]);
    }
    commodities.push_back(std::move(commodity));
  }
  std::optional<NetworkAnnotation> graph;
  if (json.contains("graph")) graph = GraphFromJson(json["graph"]);
  return GameInstance(std::move(resources), std::move(commodities),
                      std::move(graph));
}

Json FlowToJson(const GameInstance& instance, const Flow& flow) {
  Json out = Json::array();
  for (int i = 0; i < flow.num_commodities(); ++i) {
    for (int j = 0; j < flow.num_classes(i); ++j) {
      for (int p = 0; p < instance.num_strategies(i); ++p) {
        double value = flow.ClassPathFlow(i, j, p);
        if (value == 0.0) continue;
        out.push_back({{"commodity", i},
                       {"class", j},
                       {"path", Ids(instance, i, p)},
                       {"value", value}});
      }
    }
  }
  return out;
}

Flow FlowFromJson(const GameInstance& instance, const Json& json) {
  if (!json.is_array()) throw InputError("a flow is an array of records");
  Flow::ClassPathFlows values(instance.num_commodities());
  for (int i = 0; i < instance.num_commodities(); ++i) {
    values[i].assign(instance.num_classes(i),
                     std::vector<double>(instance.num_strategies(i), 0.0));
  }
  for (const Json& record : json) {
    int i = IntField(record, "commodity");
    if (i < 0 || i >= instance.num_commodities()) {
      throw InputError("flow record names commodity " + std::to_string(i) +
                       " which does not exist");
    }
    int j = record.contains("class") ? IntField(record, "class") : 0;
    if (j < 0 || j >= instance.num_classes(i)) {
      throw InputError("flow record names class " + std::to_string(j) +
                       " which does not exist");
    }
    std::vector<std::string> path = Strings(Field(record, "path"), "path");
    int p = instance.FindStrategy(i, path);
    if (p < 0) {
      std::string ids;
      for (const std::string& id : path) ids += (ids.empty() ? "" : ",") + id;
      throw InputError("flow record path {" + ids +
                       "} is not a strategy of commodity " + std::to_string(i));
    }
    values[i][j][p] += NumberField(record, "value");
  }
  return Flow(instance, std::move(values));
}

Json SensitivityToJson(const SensitivityProfile& profile) {
  Json out = Json::array();
  for (int i = 0; i < profile.num_commodities(); ++i) {
    out.push_back(ClassesToJson(profile.classes(i)));
  }
  return out;
}

SensitivityProfile SensitivityFromJson(const Json& json) {
  if (!json.is_array()) throw InputError("a profile is an array per commodity");
  std::vector<std::vector<SensitivityClass>> classes;
  for (const Json& c : json) classes.push_back(ClassesFromJson(c));
  return SensitivityProfile(std::move(classes));
}

Json EdgeDeviationToJson(const EdgeDeviation& deviation) {
  if (deviation.kind() == EdgeDeviationKind::kScaled) {
    return {{"kind", "scaled"}, {"fraction", deviation.fraction()}};
  }
  return {{"kind", "function"},
          {"latency", LatencyToJson(deviation.function())}};
}

EdgeDeviation EdgeDeviationFromJson(const Json& json) {
  std::string kind = StringField(json, "kind");
  if (kind == "scaled") {
    return EdgeDeviation::Scaled(NumberField(json, "fraction"));
  }
  if (kind == "function") {
    return EdgeDeviation::Function(LatencyFromJson(Field(json, "latency")));
  }
  throw InputError("unknown edge deviation kind '" + kind + "'");
}

Json DeviationsToJson(const GameInstance& instance,
                      const DeviationProfile& profile) {
  Json out = {{"beta", profile.beta()}};
  if (profile.edge_induced()) {
    Json edges = Json::object();
    for (int e = 0; e < instance.num_resources(); ++e) {
      edges[instance.resources()[e].id] =
          EdgeDeviationToJson(profile.edges().at(e));
    }
    out["edges"] = edges;
  } else {
    out["paths"] = profile.explicit_values();
  }
  return out;
}

DeviationProfile DeviationsFromJson(const GameInstance& instance,
                                    const Json& json) {
  double beta = NumberField(json, "beta");
  if (json.contains("edges")) {
    const Json& edges = json["edges"];
    if (!edges.is_object()) throw InputError("'edges' must be an object");
    std::vector<EdgeDeviation> out(instance.num_resources(),
                                   EdgeDeviation::Scaled(0.0));
    for (auto it = edges.begin(); it != edges.end(); ++it) {
      out[instance.RequireResource(it.key())] =
          EdgeDeviationFromJson(it.value());
    }
    return DeviationProfile::EdgeInduced(beta, std::move(out));
  }
  const Json& paths = ArrayField(json, "paths");
  std::vector<std::vector<double>> values;
  for (const Json& row : paths) values.push_back(Numbers(row, "paths"));
  if (static_cast<int>(values.size()) != instance.num_commodities()) {
    throw InputError("'paths' needs one row per commodity");
  }
  for (int i = 0; i < instance.num_commodities(); ++i) {
    if (static_cast<int>(values[i].size()) != instance.num_strategies(i)) {
      throw InputError("'paths' needs one value per strategy");
    }
  }
  return DeviationProfile::Explicit(beta, std::move(values));
}

Json BoundToJson(const BoundValue& bound) {
  Json out = {{"name", bound.name}};
  if (bound.infinite) {
    out["infinite"] = true;
  } else {
    out["value"] = bound.value;
  }
  out["requires"] = bound.requires_condition;
  return out;
}

BoundValue BoundFromJson(const Json& json) {
  std::string name = StringField(json, "name");
  std::string requires_condition =
      json.contains("requires") ? StringField(json, "requires") : "";
  if (json.contains("infinite") && json["infinite"].is_boolean() &&
      json["infinite"].get<bool>()) {
    return BoundValue::Infinite(std::move(name), std::move(requires_condition));
  }
  return BoundValue::Finite(std::move(name), NumberField(json, "value"),
                            std::move(requires_condition));
}

Json CertificateToJson(const GameInstance& instance,
                       const EquilibriumCertificate& certificate) {
  Json worst = Json::array();
  for (const ClassViolation& v : certificate.worst) {
    Json item = {{"commodity", v.commodity},
                 {"class", v.cls},
                 {"used_path", Ids(instance, v.commodity, v.used_path)},
                 {"witness_path", Ids(instance, v.commodity, v.witness_path)}};
    if (v.used_path >= 0) {
      item["lhs"] = v.lhs;
      item["rhs"] = v.rhs;
      item["slack"] = v.slack;
    } else {
      item["lhs"] = nullptr;
      item["rhs"] = nullptr;
      item["slack"] = nullptr;
    }
    worst.push_back(std::move(item));
  }
  return {{"kind", CertificateKindName(certificate.kind)},
          {"pass", certificate.pass},
          {"worst", worst}};
}

Json RatioToJson(const RatioReport& report) {
  Json out = {{"tested_cost", report.tested_cost},
              {"reference_cost", report.reference_cost},
              {"ratio", report.ratio}};
  if (report.bound) out["bound"] = BoundToJson(*report.bound);
  return out;
}

Json AlternatingPathToJson(const GameInstance& instance,
                           const AlternatingPath& path) {
  const NetworkAnnotation& graph = *instance.graph();
  Json steps = Json::array();
  for (const AlternatingStep& step : path.steps) {
    steps.push_back({{"arc", graph.arcs[step.arc].id},
                     {"direction", step.forward ? "forward" : "backward"}});
  }
  Json labels = Json::object();
  for (size_t a = 0; a < path.labels.size(); ++a) {
    labels[graph.arcs[a].id] = ArcLabelName(path.labels[a]);
  }
  return {{"q", path.q}, {"path", steps}, {"labels", labels}};
}

Json MatroidGameToJson(const MatroidGameFile& file) {
  Json ground = Json::array();
  for (const Resource& r : file.game.ground_set) {
    ground.push_back({{"id", r.id}, {"latency", LatencyToJson(r.latency)}});
  }
  Json out = {{"ground_set", ground},
              {"rank", file.game.rank},
              {"demand", file.game.demand}};
  if (!file.game.classes.empty()) {
    out["classes"] = ClassesToJson(file.game.classes);
  }
  if (file.beta) out["beta"] = *file.beta;
  if (!file.edge_deviations.empty()) {
    Json edges = Json::object();
    for (size_t e = 0; e < file.edge_deviations.size(); ++e) {
      edges[file.game.ground_set[e].id] =
          EdgeDeviationToJson(file.edge_deviations[e]);
    }
    out["edge_deviations"] = edges;
  }
  return out;
}

MatroidGameFile MatroidGameFromJson(const Json& json) {
  MatroidGameFile file;
  for (const Json& r : ArrayField(json, "ground_set")) {
    file.game.ground_set.push_back(
        {StringField(r, "id"), LatencyFromJson(Field(r, "latency"))});
  }
  file.game.rank = IntField(json, "rank");
  file.game.demand = NumberField(json, "demand");
  if (json.contains("classes")) {
    file.game.classes = ClassesFromJson(json["classes"]);
  }
  if (json.contains("beta")) file.beta = NumberField(json, "beta");
  if (json.contains("edge_deviations")) {
    const Json& edges = json["edge_deviations"];
    if (!edges.is_object()) {
      throw InputError("'edge_deviations' must be an object");
    }
    file.edge_deviations.assign(file.game.ground_set.size(),
                                EdgeDeviation::Scaled(0.0));
    for (auto it = edges.begin(); it != edges.end(); ++it) {
      size_t e = 0;
      while (e < file.game.ground_set.size() &&
             file.game.ground_set[e].id != it.key()) {
        ++e;
      }
      if (e == file.game.ground_set.size()) {
        throw InputError("edge deviation for unknown element '" + it.key() +
                         "'");
      }
      file.edge_deviations[e] = EdgeDeviationFromJson(it.value());
    }
  }
  return file;
}

Json ConstructionToJson(const Construction& c, const Json& params) {
  Json out = {{"family", c.family},
              {"params", params},
              {"instance", InstanceToJson(c.instance)},
              {"flows",
               {{"tested", FlowToJson(c.instance, c.tested)},
                {"reference", FlowToJson(c.instance, c.reference)}}}};
  if (c.eps) out["eps"] = SensitivityToJson(*c.eps);
  if (c.deviations) {
    out["deviations"] = DeviationsToJson(c.instance, *c.deviations);
  }
  out["bound"] = BoundToJson(c.bound);
  out["expected_ratio"] = c.expected_ratio;
  return out;
}

Construction ConstructionFromJson(const Json& json) {
  Construction c;
  c.family = StringField(json, "family");
  c.instance = InstanceFromJson(Field(json, "instance"));
  const Json& flows = Field(json, "flows");
  c.tested = FlowFromJson(c.instance, Field(flows, "tested"));
  c.reference = FlowFromJson(c.instance, Field(flows, "reference"));
  if (json.contains("eps")) c.eps = SensitivityFromJson(json["eps"]);
  if (json.contains("deviations")) {
    c.deviations = DeviationsFromJson(c.instance, json["deviations"]);
  }
  c.bound = BoundFromJson(Field(json, "bound"));
  c.expected_ratio = NumberField(json, "expected_ratio");
  return c;
}

}  // namespace wardrop
