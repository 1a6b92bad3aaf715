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

#include "fracgap/fracint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracgap/compensated_sum.hpp"
#include "fracgap/errors.hpp"
#include "fracgap/kernels/parallel_sum.hpp"
#include "fracgap/quadrature.hpp"

namespace fracgap {

namespace {

constexpr double kMaxLevel = 4.0e18;

std::int64_t floor_level(double y, const char* which) {
  if (!std::isfinite(y) || std::fabs(y) > kMaxLevel) {
    throw DomainError(std::string("f(") + which + ") is not finite or too large");
  }
  return static_cast<std::int64_t>(std::floor(y));
}

struct ClosedForm {
  CompensatedSum rectangles;  // b beta - a alpha
  CompensatedSum breakpoints;
  double plain = 0.0;
};

CompensatedSum breakpoint_total(const FloorDecomposition& dec) {
  return kernels::parallel_sum(0, static_cast<std::int64_t>(dec.count()),
                               [&dec](std::int64_t i) {
                                 return dec.breakpoint(static_cast<std::uint64_t>(i));
                               });
}

ClosedForm closed_form(const FuncSpec& spec, const FloorDecomposition& dec) {
  ClosedForm cf;
  cf.rectangles.add_product(dec.b(), static_cast<double>(dec.beta()));
  cf.rectangles.add_product(-dec.a(), static_cast<double>(dec.alpha()));
  cf.breakpoints = breakpoint_total(dec);
  cf.plain = spec.definite_integral(dec.a(), dec.b());
  return cf;
}

}  // namespace

FloorDecomposition::FloorDecomposition(const FuncSpec& spec, double a, double b,
                                       const Tolerances& tol)
    : inverse_(spec.inverse_eval), direction_(spec.direction), a_(a), b_(b) {
  if (!(a < b)) throw DomainError("integration range requires a < b");
  if (!spec.domain.contains(a) || !spec.domain.contains(b)) {
    throw DomainError("integration endpoint outside the domain of " + spec.name);
  }
  alpha_ = floor_level(spec.eval(a), "a");
  beta_ = floor_level(spec.eval(b), "b");
  const std::int64_t span =
      direction_ == Direction::increasing ? beta_ - alpha_ : alpha_ - beta_;
  if (span < 0) {
    throw DomainError(spec.name + " is not " + to_string(direction_) + " on [a, b]");
  }
  count_ = static_cast<std::uint64_t>(span);
  if (count_ > tol.breakpoint_cap) {
    std::ostringstream msg;
    msg << "breakpoint count " << count_ << " exceeds cap " << tol.breakpoint_cap;
    throw ResourceError(msg.str());
  }
}

std::int64_t FloorDecomposition::level(std::uint64_t i) const {
  const auto k = static_cast<std::int64_t>(i);
  return direction_ == Direction::increasing ? alpha_ + 1 + k : alpha_ - k;
}

double FloorDecomposition::raw_breakpoint(std::uint64_t i) const {
  return inverse_(static_cast<double>(level(i)));
}

double FloorDecomposition::breakpoint(std::uint64_t i) const {
  return std::clamp(raw_breakpoint(i), a_, b_);
}

double FloorDecomposition::breakpoint_sum() const { return breakpoint_total(*this).value(); }

double FloorDecomposition::breakpoint_sum_serial() const {
  return kernels::serial_sum(0, static_cast<std::int64_t>(count_),
                             [this](std::int64_t i) {
                               return breakpoint(static_cast<std::uint64_t>(i));
                             })
      .value();
}

std::vector<double> FloorDecomposition::breakpoints() const {
  std::vector<double> out(count_);
  for (std::uint64_t i = 0; i < count_; ++i) out[i] = breakpoint(i);
  return out;
}

double integrate_frac_exact(const FuncSpec& spec, double a, double b, const Tolerances& tol) {
  const FloorDecomposition dec(spec, a, b, tol);
  const ClosedForm cf = closed_form(spec, dec);

  CompensatedSum frac;
  frac.add(cf.plain);
  frac.add(-cf.rectangles.value());
  // The breakpoint sum enters the floor integral with a minus sign for
  // increasing f and a plus sign for decreasing f.
  frac.add(dec.direction() == Direction::increasing ? cf.breakpoints : -cf.breakpoints);
  double value = frac.value();

  // Rounding can push an exact 0 (or the supremum b - a) a few ulps out.
  const double scale = std::fabs(cf.plain) + std::fabs(cf.rectangles.value()) +
                       std::fabs(cf.breakpoints.value());
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  const double width = b - a;
  if (value < 0.0 && value >= -slack) value = 0.0;
  if (value >= width && value <= width + slack) value = std::nextafter(width, 0.0);
  return value;
}

double integrate_floor(const FuncSpec& spec, double a, double b, const Tolerances& tol) {
  const FloorDecomposition dec(spec, a, b, tol);
  CompensatedSum floor_sum;
  floor_sum.add_product(b, static_cast<double>(dec.beta()));
  floor_sum.add_product(-a, static_cast<double>(dec.alpha()));
  const CompensatedSum bps = breakpoint_total(dec);
  floor_sum.add(dec.direction() == Direction::increasing ? -bps : bps);
  return floor_sum.value();
}

double integrate_frac_quadrature(const FuncSpec& spec, double a, double b, double tol,
                                 const Tolerances& cfg) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const FloorDecomposition dec(spec, a, b, cfg);
  const double width = b - a;

  CompensatedSum total;
  double error = 0.0;
  bool converged = true;
  double left = a;
  for (std::uint64_t i = 0; i <= dec.count(); ++i) {
    const double right = i < dec.count() ? dec.breakpoint(i) : b;
    if (right > left) {
      const double level = std::floor(spec.eval(0.5 * (left + right)));
      const auto& f = spec.eval;
      const QuadResult r = gauss_kronrod([&f, level](double x) { return f(x) - level; },
                                         left, right, tol * (right - left) / width,
                                         cfg.quad_max_depth);
      total.add(r.value);
      error += r.error;
      converged = converged && r.converged;
    }
    left = std::max(left, right);
  }

  if (!converged) {
    std::ostringstream msg;
    msg << "fractional-part quadrature of " << spec.name << " did not converge: estimate "
        << total.value() << ", error bound " << error;
    throw QuadratureError(msg.str(), total.value(), error);
  }
  return total.value();
}

}  // namespace fracgap
