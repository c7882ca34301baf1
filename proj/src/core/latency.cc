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

#include "wardrop/core/latency.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace wardrop {
namespace {

std::string Format(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

}  // namespace

const char* LatencyKindName(LatencyKind kind) {
  switch (kind) {
    case LatencyKind::kConstant:
      return "constant";
    case LatencyKind::kAffine:
      return "affine";
    case LatencyKind::kPolynomial:
      return "poly";
    case LatencyKind::kPiecewiseLinear:
      return "pwl";
  }
  return "unknown";
}

LatencyFn LatencyFn::Constant(double value) {
  LatencyFn fn;
  fn.kind_ = LatencyKind::kConstant;
  fn.coefficients_ = {value};
  return fn;
}

LatencyFn LatencyFn::Affine(double intercept, double slope) {
  LatencyFn fn;
  fn.kind_ = LatencyKind::kAffine;
  fn.coefficients_ = {intercept, slope};
  return fn;
}

LatencyFn LatencyFn::Polynomial(std::vector<double> coefficients) {
  LatencyFn fn;
  fn.kind_ = LatencyKind::kPolynomial;
  fn.coefficients_ = std::move(coefficients);
  return fn;
}

LatencyFn LatencyFn::PiecewiseLinear(std::vector<Breakpoint> points,
                                     double final_slope) {
  LatencyFn fn;
  fn.kind_ = LatencyKind::kPiecewiseLinear;
  fn.coefficients_.clear();
  fn.points_ = std::move(points);
  fn.final_slope_ = final_slope;
  return fn;
}

double LatencyFn::operator()(double load) const {
  switch (kind_) {
    case LatencyKind::kConstant:
      return coefficients_[0];
    case LatencyKind::kAffine:
      return coefficients_[0] + coefficients_[1] * load;
    case LatencyKind::kPolynomial: {
      double value = 0.0;
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        value = value * load + *it;
      }
      return value;
    }
    case LatencyKind::kPiecewiseLinear:
      return EvaluatePiecewise(load);
  }
  return 0.0;
}

double LatencyFn::EvaluatePiecewise(double load) const {
  if (points_.empty()) return 0.0;
  if (load <= points_.front().load) return points_.front().value;
  const Breakpoint& last = points_.back();
  if (load >= last.load) return last.value + final_slope_ * (load - last.load);
  auto upper = std::upper_bound(
      points_.begin(), points_.end(), load,
      [](double x, const Breakpoint& p) { return x < p.load; });
  const Breakpoint& right = *upper;
  const Breakpoint& left = *(upper - 1);
  double t = (load - left.load) / (right.load - left.load);
  return left.value + t * (right.value - left.value);
}

double LatencyFn::Integral(double load) const {
  if (load <= 0.0) return 0.0;
  switch (kind_) {
    case LatencyKind::kConstant:
      return coefficients_[0] * load;
    case LatencyKind::kAffine:
      return coefficients_[0] * load + 0.5 * coefficients_[1] * load * load;
    case LatencyKind::kPolynomial: {
      double value = 0.0;
      for (size_t i = coefficients_.size(); i-- > 0;) {
        value = value * load + coefficients_[i] / static_cast<double>(i + 1);
      }
      return value * load;
    }
    case LatencyKind::kPiecewiseLinear: {
      if (points_.empty()) return 0.0;
      const Breakpoint& first = points_.front();
      double total = first.value * std::min(load, first.load);
      if (load <= first.load) return total;
      for (size_t k = 1; k < points_.size(); ++k) {
        const Breakpoint& a = points_[k - 1];
        const Breakpoint& b = points_[k];
        if (load <= a.load) break;
        double hi = std::min(load, b.load);
        double value_hi = EvaluatePiecewise(hi);
        total += 0.5 * (a.value + value_hi) * (hi - a.load);
      }
      const Breakpoint& last = points_.back();
      if (load > last.load) {
        double d = load - last.load;
        total += last.value * d + 0.5 * final_slope_ * d * d;
      }
      return total;
    }
  }
  return 0.0;
}

double LatencyFn::MaxLoadAtMost(double level, double cap) const {
  switch (kind_) {
    case LatencyKind::kConstant:
      return coefficients_[0] <= level ? cap : 0.0;
    case LatencyKind::kAffine: {
      double a = coefficients_[0];
      double b = coefficients_[1];
      if (a > level) return 0.0;
      if (b <= 0.0) return cap;
      return std::clamp((level - a) / b, 0.0, cap);
    }
    case LatencyKind::kPolynomial:
      return SearchLoad(level, cap, /*strict=*/false);
    case LatencyKind::kPiecewiseLinear:
      return PiecewiseInverse(level, cap, /*strict=*/false);
  }
  return 0.0;
}

double LatencyFn::MaxLoadBelow(double level, double cap) const {
  switch (kind_) {
    case LatencyKind::kConstant:
      return coefficients_[0] < level ? cap : 0.0;
    case LatencyKind::kAffine: {
      double a = coefficients_[0];
      double b = coefficients_[1];
      if (a >= level) return 0.0;
      if (b <= 0.0) return cap;
      return std::clamp((level - a) / b, 0.0, cap);
    }
    case LatencyKind::kPolynomial:
      return SearchLoad(level, cap, /*strict=*/true);
    case LatencyKind::kPiecewiseLinear:
      return PiecewiseInverse(level, cap, /*strict=*/true);
  }
  return 0.0;
}

double LatencyFn::PiecewiseInverse(double level, double cap,
                                   bool strict) const {
  auto exceeds = [&](double value) {
    return strict ? value >= level : value > level;
  };
  if (points_.empty()) return exceeds(0.0) ? 0.0 : cap;
  if (exceeds(points_.front().value)) return 0.0;
  for (size_t k = 1; k < points_.size(); ++k) {
    const Breakpoint& a = points_[k - 1];
    const Breakpoint& b = points_[k];
    if (exceeds(b.value)) {
      double x = a.load +
                 (level - a.value) * (b.load - a.load) / (b.value - a.value);
      return std::clamp(x, 0.0, cap);
    }
  }
  const Breakpoint& last = points_.back();
  if (final_slope_ <= 0.0) return cap;
  return std::clamp(last.load + (level - last.value) / final_slope_, 0.0, cap);
}

double LatencyFn::SearchLoad(double level, double cap, bool strict) const {
  auto inside = [&](double x) {
    double value = (*this)(x);
    return strict ? value < level : value <= level;
  };
  if (!inside(0.0)) return 0.0;
  if (inside(cap)) return cap;
  double lo = 0.0;
  double hi = cap;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

LatencyFn LatencyFn::Scaled(double factor) const {
  LatencyFn fn = *this;
  for (double& c : fn.coefficients_) c *= factor;
  for (Breakpoint& p : fn.points_) p.value *= factor;
  fn.final_slope_ *= factor;
  return fn;
}

std::vector<std::string> LatencyFn::Violations() const {
  std::vector<std::string> out;
  for (double c : coefficients_) {
    if (!std::isfinite(c)) {
      out.push_back("non-finite coefficient");
      return out;
    }
  }
  switch (kind_) {
    case LatencyKind::kConstant:
      if (coefficients_.size() != 1) out.push_back("constant needs one value");
      else if (coefficients_[0] < 0.0)
        out.push_back(Format("negative constant %.17g", coefficients_[0]));
      break;
    case LatencyKind::kAffine:
      if (coefficients_.size() != 2) {
        out.push_back("affine needs intercept and slope");
        break;
      }
      if (coefficients_[0] < 0.0)
        out.push_back(Format("negative intercept %.17g", coefficients_[0]));
      if (coefficients_[1] < 0.0)
        out.push_back(
            Format("monotonicity: negative slope %.17g", coefficients_[1]));
      break;
    case LatencyKind::kPolynomial:
      if (coefficients_.empty()) out.push_back("polynomial has no terms");
      for (size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] < 0.0) {
          out.push_back(Format("negative coefficient of degree %.0f: %.17g",
                               static_cast<double>(i), coefficients_[i]));
        }
      }
      break;
    case LatencyKind::kPiecewiseLinear: {
      if (points_.empty()) {
        out.push_back("piecewise-linear function has no breakpoints");
        break;
      }
      if (!std::isfinite(final_slope_)) out.push_back("non-finite final slope");
      if (points_.front().load < 0.0)
        out.push_back(Format("breakpoint at negative load %.17g",
                             points_.front().load));
      for (size_t k = 0; k < points_.size(); ++k) {
        const Breakpoint& p = points_[k];
        if (!std::isfinite(p.load) || !std::isfinite(p.value)) {
          out.push_back("non-finite breakpoint");
          continue;
        }
        if (p.value < 0.0)
          out.push_back(Format("negative value %.17g at load %.17g", p.value,
                               p.load));
        if (k == 0) continue;
        const Breakpoint& prev = points_[k - 1];
        if (p.load <= prev.load) {
          out.push_back(Format(
              "continuity: breakpoint loads not strictly increasing at %.17g",
              p.load));
        } else if (p.value < prev.value) {
          out.push_back(Format(
              "monotonicity: negative slope on segment ending at load %.17g",
              p.load));
        }
      }
      if (final_slope_ < 0.0)
        out.push_back(
            Format("monotonicity: negative final slope %.17g", final_slope_));
      break;
    }
  }
  return out;
}

}  // namespace wardrop
