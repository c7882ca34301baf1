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

#ifndef WARDROP_CORE_LATENCY_H_
#define WARDROP_CORE_LATENCY_H_

#include <string>
#include <vector>

namespace wardrop {

enum class LatencyKind { kConstant, kAffine, kPolynomial, kPiecewiseLinear };

const char* LatencyKindName(LatencyKind kind);

struct Breakpoint {
  double load = 0.0;
  double value = 0.0;

  bool operator==(const Breakpoint&) const = default;
};

// A resource latency function l(x) on x >= 0.
//
// Piecewise-linear functions hold their first value to the left of the first
// breakpoint, interpolate linearly between breakpoints and continue with
// `final_slope` after the last one. Factories do not validate; call
// Violations() (or ValidateInstance) to check the nonnegativity and
// monotonicity requirements.
class LatencyFn {
 public:
  LatencyFn() = default;  // Constant zero.

  static LatencyFn Constant(double value);
  // intercept + slope * x
  static LatencyFn Affine(double intercept, double slope);
  // coefficients[0] + coefficients[1] * x + coefficients[2] * x^2 + ...
  static LatencyFn Polynomial(std::vector<double> coefficients);
  static LatencyFn PiecewiseLinear(std::vector<Breakpoint> points,
                                   double final_slope);

  LatencyKind kind() const { return kind_; }
  // Constant: {value}; affine: {intercept, slope}; polynomial: all terms.
  const std::vector<double>& coefficients() const { return coefficients_; }
  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  double final_slope() const { return final_slope_; }

  double operator()(double load) const;

  // Integral of l over [0, load].
  double Integral(double load) const;

  // sup{x in [0, cap] : l(x) <= level}, or 0 when the set is empty.
  // Requires a valid (non-decreasing) function.
  double MaxLoadAtMost(double level, double cap) const;
  // sup{x in [0, cap] : l(x) < level}, or 0 when the set is empty.
  double MaxLoadBelow(double level, double cap) const;

  // factor * l(x); factor must be nonnegative.
  LatencyFn Scaled(double factor) const;

  // Human-readable description of every violated requirement; empty iff the
  // function is nonnegative, non-decreasing and continuous on [0, inf).
  std::vector<std::string> Violations() const;

  bool operator==(const LatencyFn&) const = default;

 private:
  double EvaluatePiecewise(double load) const;
  double SearchLoad(double level, double cap, bool strict) const;
  double PiecewiseInverse(double level, double cap, bool strict) const;

  LatencyKind kind_ = LatencyKind::kConstant;
  std::vector<double> coefficients_{0.0};
  std::vector<Breakpoint> points_;
  double final_slope_ = 0.0;
};

}  // namespace wardrop

#endif  // WARDROP_CORE_LATENCY_H_
