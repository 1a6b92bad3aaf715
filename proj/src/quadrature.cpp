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

#include "fracgap/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracgap/compensated_sum.hpp"
#include "fracgap/errors.hpp"

namespace fracgap {

namespace {

// Kronrod 15-point abscissae (positive half) and weights; every second node
// is also a Gauss 7-point node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[static_cast<std::size_t>(j)] * sum;
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
  }
  return {kronrod * half, std::fabs((kronrod - gauss) * half)};
}

struct Accumulator {
  CompensatedSum value;
  double error = 0.0;
  bool converged = true;
};

void refine(const std::function<double(double)>& f, double a, double b, double tol,
            int depth, int max_depth, const Panel& whole, Accumulator& acc) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double floor = 50.0 * eps * std::fabs(whole.value);
  if (whole.error <= tol || whole.error <= floor || !std::isfinite(whole.error)) {
    acc.value.add(whole.value);
    acc.error += whole.error;
    if (!std::isfinite(whole.error)) acc.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  if (depth >= max_depth || mid <= a || mid >= b) {
    acc.value.add(whole.value);
    acc.error += whole.error;
    acc.converged = false;
    return;
  }
  const Panel left = gk15(f, a, mid);
  const Panel right = gk15(f, mid, b);
  refine(f, a, mid, 0.5 * tol, depth + 1, max_depth, left, acc);
  refine(f, mid, b, 0.5 * tol, depth + 1, max_depth, right, acc);
}

}  // namespace

QuadResult gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                         double abs_tol, int max_depth) {
  if (a == b) return {0.0, 0.0, true};
  if (!(abs_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (b < a) {
    QuadResult r = gauss_kronrod(f, b, a, abs_tol, max_depth);
    r.value = -r.value;
    return r;
  }
  Accumulator acc;
  refine(f, a, b, abs_tol, 0, max_depth, gk15(f, a, b), acc);
  return {acc.value.value(), acc.error, acc.converged};
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  const QuadResult r = gauss_kronrod(f, a, b, abs_tol, max_depth);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "adaptive quadrature did not converge on [" << a << ", " << b
        << "]: estimate " << r.value << ", error bound " << r.error;
    throw QuadratureError(msg.str(), r.value, r.error);
  }
  return r.value;
}

}  // namespace fracgap
