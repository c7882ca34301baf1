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

#include "wardrop/bounds/density.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wardrop/core/errors.h"

namespace wardrop {
namespace {

constexpr double kMassTolerance = 1e-9;
constexpr double kMaxIntervals = 1e7;

// Integral of the linear piece through (x0, v0), (x1, v1) over [lo, hi],
// where x0 <= lo <= hi <= x1.
double PieceMass(const Breakpoint& a, const Breakpoint& b, double lo,
                 double hi) {
  if (hi <= lo) return 0.0;
  double slope = (b.value - a.value) / (b.load - a.load);
  double at_lo = a.value + slope * (lo - a.load);
  double at_hi = a.value + slope * (hi - a.load);
  return 0.5 * (at_lo + at_hi) * (hi - lo);
}

}  // namespace

DensityFn::DensityFn(std::vector<Breakpoint> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw InputError("a density needs at least two breakpoints");
  }
  for (size_t k = 0; k < points_.size(); ++k) {
    const Breakpoint& p = points_[k];
    if (!std::isfinite(p.load) || !std::isfinite(p.value) || p.load < 0.0 ||
        p.value < 0.0) {
      throw InputError("density breakpoints must be finite and nonnegative");
    }
    if (k > 0 && !(p.load > points_[k - 1].load)) {
      throw InputError("density breakpoints must be strictly increasing");
    }
  }
}

DensityFn DensityFn::Uniform(double lo, double hi) {
  if (!(hi > lo)) throw InputError("empty uniform support");
  double height = 1.0 / (hi - lo);
  return DensityFn({{lo, height}, {hi, height}});
}

DensityFn DensityFn::Triangle(double center, double half_width) {
  if (!(half_width > 0.0) || center - half_width < 0.0) {
    throw InputError("triangle must have positive width inside [0, inf)");
  }
  return DensityFn({{center - half_width, 0.0},
                    {center, 1.0 / half_width},
                    {center + half_width, 0.0}});
}

double DensityFn::operator()(double y) const {
  if (y < points_.front().load || y > points_.back().load) return 0.0;
  auto upper = std::upper_bound(
      points_.begin(), points_.end(), y,
      [](double x, const Breakpoint& p) { return x < p.load; });
  if (upper == points_.end()) return points_.back().value;
  const Breakpoint& b = *upper;
  const Breakpoint& a = *(upper - 1);
  return a.value + (b.value - a.value) * (y - a.load) / (b.load - a.load);
}

double DensityFn::MassBetween(double a, double b) const {
  double total = 0.0;
  for (size_t k = 1; k < points_.size(); ++k) {
    const Breakpoint& p = points_[k - 1];
    const Breakpoint& q = points_[k];
    total += PieceMass(p, q, std::max(a, p.load), std::min(b, q.load));
  }
  return total;
}

double DensityFn::Mass() const {
  return MassBetween(points_.front().load, points_.back().load);
}

double DensityFn::Mean() const {
  double total = 0.0;
  for (size_t k = 1; k < points_.size(); ++k) {
    double a = points_[k - 1].load;
    double p = points_[k - 1].value;
    double w = points_[k].load - a;
    double s = (points_[k].value - p) / w;
    total += a * p * w + a * s * w * w / 2 + p * w * w / 2 + s * w * w * w / 3;
  }
  return total;
}

double DensityFn::MaxTailMoment() const {
  auto moment = [this](double t) { return t * TailMass(t); };
  double best = 0.0;
  for (const Breakpoint& p : points_) best = std::max(best, moment(p.load));
  // On a piece starting at a with density p + s u, the derivative of
  // t * TailMass(t) at t = a + u is c0 + c1 u + c2 u^2.
  for (size_t k = 1; k < points_.size(); ++k) {
    double a = points_[k - 1].load;
    double p = points_[k - 1].value;
    double w = points_[k].load - a;
    double s = (points_[k].value - p) / w;
    double tail_after = TailMass(points_[k].load);
    double c0 = tail_after + p * w + s * w * w / 2 - a * p;
    double c1 = -2 * p - a * s;
    double c2 = -1.5 * s;
    std::vector<double> roots;
    if (c2 == 0.0) {
      if (c1 != 0.0) roots.push_back(-c0 / c1);
    } else {
      double disc = c1 * c1 - 4 * c2 * c0;
      if (disc >= 0.0) {
        double sq = std::sqrt(disc);
        roots.push_back((-c1 + sq) / (2 * c2));
        roots.push_back((-c1 - sq) / (2 * c2));
      }
    }
    for (double u : roots) {
      if (u > 0.0 && u < w) best = std::max(best, moment(a + u));
    }
  }
  return best;
}

void DensityFn::RequireNormalized() const {
  double mass = Mass();
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw InputError("density integrates to " + std::to_string(mass) +
                     ", not 1");
  }
}

double DensityFn::TailQuantile(double tail) const {
  if (tail <= 0.0) {
    size_t k = points_.size() - 1;
    while (k > 0 && points_[k].value == 0.0 && points_[k - 1].value == 0.0) {
      --k;
    }
    return points_[k].load;
  }
  double lo = points_.front().load;
  double hi = points_.back().load;
  if (TailMass(lo) <= tail) return lo;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (TailMass(mid) > tail ? lo : hi) = mid;
  }
  return hi;
}

BoundValue SrBoundContinuous(double beta, const DensityFn& density) {
  if (!(beta >= 0.0)) throw InputError("beta must be nonnegative");
  density.RequireNormalized();
  return BoundValue::Finite("sr_continuous", 1.0 + beta * density.Mean());
}

BoundValue DrBoundContinuous(double beta, const DensityFn& density) {
  if (!(beta >= 0.0)) throw InputError("beta must be nonnegative");
  density.RequireNormalized();
  return BoundValue::Finite("dr_continuous",
                            1.0 + beta * density.MaxTailMoment());
}

DiscreteClasses DiscretizeDensity(const DensityFn& density, double width,
                                  double tail) {
  if (!(width > 0.0)) throw InputError("interval width must be positive");
  if (!(tail >= 0.0 && tail < 1.0)) {
    throw InputError("tail mass must lie in [0, 1)");
  }
  const double alpha = density.TailQuantile(tail);
  if (alpha / width > kMaxIntervals) {
    throw RefusalError("too many discretization intervals");
  }
  DiscreteClasses out;
  for (long k = 0;; ++k) {
    double lo = static_cast<double>(k) * width;
    if (!(lo < alpha)) break;
    double hi = std::min(static_cast<double>(k + 1) * width, alpha);
    double mass = density.MassBetween(lo, hi);
    if (mass > 0.0) {
      out.demand.push_back(mass);
      out.sensitivity.push_back(lo);
    }
  }
  if (tail > 0.0) {
    out.demand.push_back(tail);
    out.sensitivity.push_back(alpha);
  }
  return out;
}

}  // namespace wardrop
