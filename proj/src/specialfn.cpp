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

#include "fracgap/specialfn.hpp"

#include <cmath>

#include "fracgap/config.hpp"
#include "fracgap/errors.hpp"
#include "fracgap/fracint.hpp"
#include "fracgap/funcspec.hpp"
#include "fracgap/kernels/parallel_sum.hpp"
#include "fracgap/quadrature.hpp"

namespace fracgap {

namespace {

double inv_log(double t) { return 1.0 / std::log(t); }

}  // namespace

double li_offset(double x) {
  if (!(x >= 2.0)) throw DomainError("li_offset: x must be >= 2");
  return li_offset_diff(2.0, x);
}

double li_offset_diff(double u, double v) {
  if (!(u >= 2.0) || !(v >= 2.0)) throw DomainError("li_offset_diff: arguments must be >= 2");
  const auto& tol = default_tolerances();
  return integrate_adaptive(inv_log, u, v, tol.li_tol, tol.quad_max_depth);
}

double harmonic(std::uint64_t n) {
  if (n == 0) throw DomainError("harmonic: n must be >= 1");
  return kernels::parallel_sum(1, static_cast<std::int64_t>(n) + 1, [](std::int64_t k) {
           return 1.0 / static_cast<double>(k);
         }).value();
}

double zeta_series(int n, std::uint64_t terms) {
  if (n < 2) throw DomainError("zeta_series: n must be >= 2");
  if (terms == 0) throw DomainError("zeta_series: terms must be >= 1");
  const auto last = static_cast<std::int64_t>(terms);
  // Index i runs upward while k runs downward, so small terms go in first.
  return kernels::parallel_sum(0, last, [last, n](std::int64_t i) {
           const double k = static_cast<double>(last - i);
           return std::pow(k, -n);
         }).value();
}

ConstantEstimate zeta_via_fracint(int n, std::uint64_t c) {
  if (n < 2) throw DomainError("zeta_via_fracint: n must be >= 2");
  if (c == 0) throw DomainError("zeta_via_fracint: c must be >= 1");
  const double cd = static_cast<double>(c);
  const double cn = std::pow(cd, n);
  if (cn > 9.007199254740992e15) throw DomainError("zeta_via_fracint: c^n exceeds 2^53");

  const double head = n / (n - 1.0);
  double mean_frac = 0.0;
  if (c > 1) mean_frac = integrate_frac_exact(c_xpow_fn(cd, n), 1.0, cn) / cn;

  ConstantEstimate est;
  est.value = head - mean_frac;
  est.parameter = c;
  est.predicted_error = (std::pow(cd, 1 - n) - std::pow(cd + 1.0, 1 - n)) / (n - 1.0);
  est.method = "fracint:c_xpow";
  return est;
}

ConstantEstimate gamma_via_fracint(std::uint64_t a) {
  if (a == 0) throw DomainError("gamma_via_fracint: a must be >= 1");
  const double ad = static_cast<double>(a);
  ConstantEstimate est;
  est.value = a > 1 ? integrate_frac_exact(a_over_x_fn(ad), 1.0, ad) / ad : 0.0;
  est.parameter = a;
  est.predicted_error = 0.5 / ad;
  est.method = "fracint:a_over_x";
  return est;
}

}  // namespace fracgap
