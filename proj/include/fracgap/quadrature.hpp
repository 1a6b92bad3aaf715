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

#include <functional>

namespace fracgap {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

/// Adaptive Gauss-Kronrod (7/15) with bisection. A panel is accepted when
/// its error estimate drops below its share of `abs_tol`, or below the
/// rounding floor of its own value. Reports non-convergence instead of
/// throwing.
QuadResult gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, int max_depth = 60);

/// Same, but throws QuadratureError carrying the best estimate on failure.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 60);

}  // namespace fracgap
