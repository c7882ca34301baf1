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

#ifndef WARDROP_TOOLS_COMMANDS_H_
#define WARDROP_TOOLS_COMMANDS_H_

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "families.h"
#include "wardrop/core/tolerance.h"

namespace wardrop::cli {

// Exit codes shared by every command.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitInvariant = 4;

// Splits "0.5,0.5" into numbers. Throws InputError on malformed entries.
std::vector<double> ParseNumberList(const std::string& text);

// Writes the construction bundle to `out_path` (or `out` when empty) and
// echoes the bound to `out` (or `err` when the bundle went to `out`).
int RunGen(const std::string& family, const GenParams& params,
           const std::string& out_path, const Tolerance& tol,
           std::ostream& out, std::ostream& err);

struct AnalyzeOptions {
  std::string instance_path;  // Instance, generated bundle or matroid game.
  std::string flow_path;      // Flow records or a bundle; optional.
  std::optional<double> eps;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::string out_path;
};
int RunAnalyze(const AnalyzeOptions& options, const Tolerance& tol,
               std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::string family;
  // Raw range per parameter name. Numbers: comma-separated values or
  // START:STEP:STOP progressions. r and gamma: ';'-separated alternatives of
  // comma-separated lists. latency and density: comma-separated names.
  std::map<std::string, std::string> ranges;
  int jobs = 1;
  bool timing = true;
  std::string format = "csv";
  std::string out_path;
};
int RunSweep(const SweepOptions& options, const Tolerance& tol,
             std::ostream& out, std::ostream& err);

}  // namespace wardrop::cli

#endif  // WARDROP_TOOLS_COMMANDS_H_
