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

#ifndef WARDROP_BOUNDS_DENSITY_H_
#define WARDROP_BOUNDS_DENSITY_H_

#include <vector>

#include "wardrop/bounds/bound_value.h"
#include "wardrop/core/latency.h"

namespace wardrop {

// A piecewise-linear sensitivity density, zero outside
// [points.front().load, points.back().load]. Breakpoint `load` is the
// sensitivity and `value` the density there.
class DensityFn {
 public:
  DensityFn() = default;
  // Throws InputError unless there are at least two breakpoints with strictly
  // increasing nonnegative positions and nonnegative values.
  explicit DensityFn(std::vector<Breakpoint> points);

  // Uniform density on [lo, hi].
  static DensityFn Uniform(double lo, double hi);
  // Symmetric triangle of the given half width centred at `center`.
  static DensityFn Triangle(double center, double half_width);

  const std::vector<Breakpoint>& points() const { return points_; }
  double support_end() const { return points_.back().load; }

  double operator()(double y) const;
  double Mass() const;
  // Integral over [a, b] of the density.
  double MassBetween(double a, double b) const;
  double TailMass(double t) const { return MassBetween(t, support_end()); }
  double Mean() const;
  // sup over t >= 0 of t * TailMass(t), exact per linear piece.
  double MaxTailMoment() const;

  // Throws InputError unless the mass is 1 within 1e-9.
  void RequireNormalized() const;

  // Smallest t with TailMass(t) = mass beyond it equal to `tail`.
  double TailQuantile(double tail) const;

 private:
  std::vector<Breakpoint> points_;
};

// 1 + beta * mean.
BoundValue SrBoundContinuous(double beta, const DensityFn& density);
// 1 + beta * sup_t t * TailMass(t).
BoundValue DrBoundContinuous(double beta, const DensityFn& density);

struct DiscreteClasses {
  std::vector<double> demand;
  std::vector<double> sensitivity;
};

// Splits [0, alpha] into intervals of width `width`, where alpha leaves mass
// `tail` beyond it, and returns one class per nonempty interval (sensitivity
// at the left end) plus a class of demand `tail` at alpha when tail > 0.
// Throws InputError unless width > 0 and 0 <= tail < 1.
DiscreteClasses DiscretizeDensity(const DensityFn& density, double width,
                                  double tail);

}  // namespace wardrop

#endif  // WARDROP_BOUNDS_DENSITY_H_
