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
#include <string>

namespace fracgap {

/// Offset logarithmic integral: int_2^x dt / log t.
///
/// The base point is 2, not 0. Every consumer uses differences
/// li_offset(u) - li_offset(v), which do not depend on the base point.
double li_offset(double x);

/// int_u^v dt / log t for 2 <= u <= v, integrated directly over [u, v] so
/// that short intervals keep full relative accuracy.
double li_offset_diff(double u, double v);

/// H_n = sum_{k<=n} 1/k, compensated.
double harmonic(std::uint64_t n);

/// sum_{k<=terms} k^-n, compensated, smallest terms first.
double zeta_series(int n, std::uint64_t terms);

struct ConstantEstimate {
  double value = 0.0;
  std::uint64_t parameter = 0;
  double predicted_error = 0.0;
  std::string method;
};

/// zeta(n) ~ n/(n-1) - c^-n int_1^{c^n} {c x^(-1/n)} dx.
///
/// For finite c the estimate equals c^(1-n)/(n-1) + sum_{k<=c} k^-n, so it
/// overshoots zeta(n) by at most (c^(1-n) - (c+1)^(1-n)) / (n-1), which is
/// reported as predicted_error.
ConstantEstimate zeta_via_fracint(int n, std::uint64_t c);

/// (1/a) int_1^a {a/x} dx = ln a - H_a + 1, which tends to 1 - gamma.
ConstantEstimate gamma_via_fracint(std::uint64_t a);

}  // namespace fracgap
