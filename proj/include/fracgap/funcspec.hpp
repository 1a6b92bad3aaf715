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

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fracgap/config.hpp"

namespace fracgap {

enum class Direction { increasing, decreasing };

const char* to_string(Direction d);

/// Interval of positive reals. The upper end is always open; the lower end
/// may be closed (the log family starts at 2, where the offset logarithmic
/// integral is anchored).
struct Domain {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;

  bool contains(double x) const {
    return (lo_closed ? x >= lo : x > lo) && x < hi;
  }
};

using UnaryFn = std::function<double(double)>;
using IntervalFn = std::function<double(double, double)>;

/// A strictly monotone function with its inverse and antiderivative.
///
/// Optionally also carries an antiderivative of 1/f (needed wherever the
/// function appears in a denominator: R_n, S_n, T_n and the residuals).
/// `integral` / `recip_integral` return definite integrals over [u, v]; when
/// not supplied they fall back to antiderivative differences. Catalog
/// entries supply cancellation-free forms for short intervals.
///
/// Values are immutable once built; all members are pure and thread-safe.
struct FuncSpec {
  std::string name;
  Direction direction = Direction::increasing;
  Domain domain;
  UnaryFn eval;
  UnaryFn inverse_eval;
  UnaryFn antideriv_eval;
  IntervalFn integral;

  UnaryFn recip_antideriv_eval;
  IntervalFn recip_integral;

  double definite_integral(double u, double v) const;
  bool has_recip() const { return static_cast<bool>(recip_antideriv_eval); }
  double recip_definite_integral(double u, double v) const;
};

/// g(x) = numerator / base(x) for an increasing, positive base. g is
/// decreasing with g^-1(y) = base^-1(numerator / y).
struct ReciprocalSpec {
  FuncSpec base;
  double numerator = 1.0;
  FuncSpec spec;
};

std::vector<FuncSpec> builtin_catalog();

/// Catalog lookup by name. The parameterized families take `c` (and `n`
/// for c_xpow); other entries ignore them.
///   identity, sqrt, log, log2, log3, inv_log, inv_log2, inv_log3,
///   c_xpow (c * x^(-1/n)), a_over_x (c / x)
FuncSpec find_builtin(const std::string& name, double c = 1.0, int n = 2);

FuncSpec identity_fn();
FuncSpec sqrt_fn();
/// (log x)^k for k in {1, 2, 3}.
FuncSpec log_power_fn(int k);
/// 1 / (log x)^k for k in {1, 2, 3}.
FuncSpec inv_log_power_fn(int k);
/// c * x^(-1/n), decreasing; n = 1 gives c / x.
FuncSpec c_xpow_fn(double c, int n);
FuncSpec a_over_x_fn(double a);

ReciprocalSpec make_reciprocal(const FuncSpec& base, double numerator);

/// Antiderivative of 1/(log x)^k (k = 1, 2, 3) built from li_offset and the
/// reduction  int dx/(log x)^(k+1) = (1/k) [int dx/(log x)^k - x/(log x)^k].
double inv_log_power_antideriv(int k, double x);

struct ValidationReport {
  double max_roundtrip_error = 0.0;  // |f^-1(f(x)) - x| / (1 + |x|)
  std::size_t monotonicity_violations = 0;
  double max_fd_abs_error = 0.0;
  double max_fd_rel_error = 0.0;
  bool passed = false;
};

ValidationReport validate(const FuncSpec& spec, std::span<const double> grid,
                          const Tolerances& tol = default_tolerances());

}  // namespace fracgap
