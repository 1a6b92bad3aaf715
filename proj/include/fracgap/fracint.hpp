// Copyright 2026 The fracgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "fracgap/config.hpp"
#include "fracgap/funcspec.hpp"

namespace fracgap {

/// Level structure of floor(f) on [a, b].
///
/// alpha = floor(f(a)), beta = floor(f(b)). The breakpoints are the points
/// f^-1(k) where floor(f) changes value, in increasing x order:
///   increasing f: k = alpha+1 .. beta
///   decreasing f: k = alpha, alpha-1 .. beta+1
/// Each breakpoint is clamped into [a, b], so panels never have negative
/// width. Breakpoints are computed on demand; there may be up to
/// Tolerances::breakpoint_cap of them.
class FloorDecomposition {
 public:
  FloorDecomposition(const FuncSpec& spec, double a, double b,
                     const Tolerances& tol = default_tolerances());

  std::int64_t alpha() const { return alpha_; }
  std::int64_t beta() const { return beta_; }
  Direction direction() const { return direction_; }
  double a() const { return a_; }
  double b() const { return b_; }
  std::uint64_t count() const { return count_; }

  /// Level k of the i-th breakpoint (0-based, increasing x).
  std::int64_t level(std::uint64_t i) const;
  /// The i-th breakpoint, clamped into [a, b].
  double breakpoint(std::uint64_t i) const;
  /// Unclamped f^-1(level(i)).
  double raw_breakpoint(std::uint64_t i) const;

  /// Compensated sum of all breakpoints (OpenMP, chunk-deterministic).
  double breakpoint_sum() const;
  /// Serial reference for breakpoint_sum().
  double breakpoint_sum_serial() const;

  std::vector<double> breakpoints() const;

 private:
  UnaryFn inverse_;
  Direction direction_;
  double a_;
  double b_;
  std::int64_t alpha_;
  std::int64_t beta_;
  std::uint64_t count_;
};

/// int_a^b {f(x)} dx in closed form:
///   increasing: int f - (b beta - a alpha) + sum_{k=alpha+1}^{beta} f^-1(k)
///   decreasing: int f - (b beta - a alpha) - sum_{k=beta+1}^{alpha} f^-1(k)
/// Accepts real endpoints. Result lies in [0, b - a).
double integrate_frac_exact(const FuncSpec& spec, double a, double b,
                            const Tolerances& tol = default_tolerances());

/// int_a^b floor(f(x)) dx = (b beta - a alpha) -/+ breakpoint sum.
double integrate_floor(const FuncSpec& spec, double a, double b,
                       const Tolerances& tol = default_tolerances());

/// Independent check of integrate_frac_exact: adaptive Gauss-Kronrod on each
/// smooth panel between breakpoints. `tol` is an absolute error target.
/// Throws QuadratureError with the best estimate if refinement runs out.
double integrate_frac_quadrature(const FuncSpec& spec, double a, double b, double tol,
                                 const Tolerances& cfg = default_tolerances());

}  // namespace fracgap
