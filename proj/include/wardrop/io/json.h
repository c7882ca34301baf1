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

#ifndef WARDROP_IO_JSON_H_
#define WARDROP_IO_JSON_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wardrop/bounds/bound_value.h"
#include "wardrop/core/deviation.h"
#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/sensitivity.h"
#include "wardrop/equilibria/certificate.h"
#include "wardrop/equilibria/construction.h"
#include "wardrop/equilibria/ratio.h"
#include "wardrop/graphs/alternating.h"
#include "wardrop/matroid/matroid.h"

namespace wardrop {

using Json = nlohmann::ordered_json;

// Serializes with every floating-point number printed to 17 significant
// digits and non-finite numbers as null. `indent` < 0 gives a single line.
std::string DumpJson(const Json& value, int indent = 2);

// Throws InputError on malformed text.
Json ParseJson(const std::string& text);
Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

// All decoders throw InputError when a field is missing or mistyped.
Json LatencyToJson(const LatencyFn& fn);
LatencyFn LatencyFromJson(const Json& json);

Json GraphToJson(const NetworkAnnotation& graph);
NetworkAnnotation GraphFromJson(const Json& json);

Json InstanceToJson(const GameInstance& instance);
GameInstance InstanceFromJson(const Json& json);

// Records {"commodity", "class", "path", "value"} for every nonzero entry.
Json FlowToJson(const GameInstance& instance, const Flow& flow);
// Unlisted entries are zero. Throws InputError for unknown paths.
Flow FlowFromJson(const GameInstance& instance, const Json& json);

// [[{"demand", "gamma"}, ...], ...] per commodity.
Json SensitivityToJson(const SensitivityProfile& profile);
SensitivityProfile SensitivityFromJson(const Json& json);

Json EdgeDeviationToJson(const EdgeDeviation& deviation);
EdgeDeviation EdgeDeviationFromJson(const Json& json);

// {"beta", "edges": {id: ...}} or {"beta", "paths": [[...], ...]}.
Json DeviationsToJson(const GameInstance& instance,
                      const DeviationProfile& profile);
DeviationProfile DeviationsFromJson(const GameInstance& instance,
                                    const Json& json);

Json BoundToJson(const BoundValue& bound);
BoundValue BoundFromJson(const Json& json);

Json CertificateToJson(const GameInstance& instance,
                       const EquilibriumCertificate& certificate);
Json RatioToJson(const RatioReport& report);
Json AlternatingPathToJson(const GameInstance& instance,
                           const AlternatingPath& path);

// {"ground_set", "rank", "demand", optional "classes", optional
// "edge_deviations": {id: deviation}, optional "beta"}.
struct MatroidGameFile {
  UniformMatroidGame game;
  std::optional<double> beta;
  std::vector<EdgeDeviation> edge_deviations;  // Empty or one per element.
};
Json MatroidGameToJson(const MatroidGameFile& file);
MatroidGameFile MatroidGameFromJson(const Json& json);

// A generated instance with its flows, profiles and bound:
// {"family", "params", "instance", "flows": {"tested", "reference"},
//  optional "eps", optional "deviations", "bound", "expected_ratio"}.
Json ConstructionToJson(const Construction& construction, const Json& params);
Construction ConstructionFromJson(const Json& json);

}  // namespace wardrop

#endif  // WARDROP_IO_JSON_H_
