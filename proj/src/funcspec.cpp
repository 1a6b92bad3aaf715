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

#include "fracgap/funcspec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracgap/errors.hpp"
#include "fracgap/quadrature.hpp"
#include "fracgap/specialfn.hpp"

namespace fracgap {

const char* to_string(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

double FuncSpec::definite_integral(double u, double v) const {
  if (integral) return integral(u, v);
  return antideriv_eval(v) - antideriv_eval(u);
}

double FuncSpec::recip_definite_integral(double u, double v) const {
  if (!has_recip()) throw DomainError(name + ": no antiderivative of 1/f available");
  if (recip_integral) return recip_integral(u, v);
  return recip_antideriv_eval(v) - recip_antideriv_eval(u);
}

namespace {

constexpr Domain kPositive{};
constexpr Domain kFromTwo{2.0, std::numeric_limits<double>::infinity(), true};

// y^(1/k) for the log family inverses.
double root(double y, int k) {
  switch (k) {
    case 1: return y;
    case 2: return std::sqrt(y);
    default: return std::cbrt(y);
  }
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

void check_log_order(int k) {
  if (k < 1 || k > 3) throw DomainError("log power must be 1, 2 or 3");
}

IntervalFn gk_integral(UnaryFn g) {
  return [g = std::move(g)](double u, double v) {
    return integrate_adaptive(g, u, v, default_tolerances().li_tol,
                              default_tolerances().quad_max_depth);
  };
}

std::string family_name(const char* base, double c, int n, bool with_n) {
  std::ostringstream os;
  os << base << "(c=" << c;
  if (with_n) os << ",n=" << n;
  os << ")";
  return os.str();
}

}  // namespace

double inv_log_power_antideriv(int k, double x) {
  check_log_order(k);
  const double l = std::log(x);
  const double g1 = li_offset(x);
  if (k == 1) return g1;
  const double g2 = g1 - x / l;
  if (k == 2) return g2;
  return 0.5 * (g2 - x / (l * l));
}

FuncSpec identity_fn() {
  FuncSpec s;
  s.name = "identity";
  s.direction = Direction::increasing;
  s.domain = kPositive;
  s.eval = [](double x) { return x; };
  s.inverse_eval = [](double y) { return y; };
  s.antideriv_eval = [](double x) { return 0.5 * x * x; };
  s.integral = [](double u, double v) { return 0.5 * (v - u) * (v + u); };
  s.recip_antideriv_eval = [](double x) { return std::log(x); };
  s.recip_integral = [](double u, double v) { return std::log1p((v - u) / u); };
  return s;
}

FuncSpec sqrt_fn() {
  FuncSpec s;
  s.name = "sqrt";
  s.direction = Direction::increasing;
  s.domain = kPositive;
  s.eval = [](double x) { return std::sqrt(x); };
  s.inverse_eval = [](double y) { return y * y; };
  s.antideriv_eval = [](double x) { return 2.0 / 3.0 * x * std::sqrt(x); };
  s.recip_antideriv_eval = [](double x) { return 2.0 * std::sqrt(x); };
  s.recip_integral = [](double u, double v) {
    return 2.0 * (v - u) / (std::sqrt(v) + std::sqrt(u));
  };
  return s;
}

FuncSpec log_power_fn(int k) {
  check_log_order(k);
  FuncSpec s;
  s.name = k == 1 ? "log" : "log" + std::to_string(k);
  s.direction = Direction::increasing;
  s.domain = kFromTwo;
  s.eval = [k](double x) { return ipow(std::log(x), k); };
  s.inverse_eval = [k](double y) { return std::exp(root(y, k)); };
  s.antideriv_eval = [k](double x) {
    const double l = std::log(x);
    switch (k) {
      case 1: return x * (l - 1.0);
      case 2: return x * ((l - 2.0) * l + 2.0);
      default: return x * (((l - 3.0) * l + 6.0) * l - 6.0);
    }
  };
  s.recip_antideriv_eval = [k](double x) { return inv_log_power_antideriv(k, x); };
  if (k == 1) {
    s.recip_integral = [](double u, double v) { return li_offset_diff(u, v); };
  } else {
    s.recip_integral = gk_integral([k](double t) { return 1.0 / ipow(std::log(t), k); });
  }
  return s;
}

FuncSpec inv_log_power_fn(int k) {
  check_log_order(k);
  FuncSpec s;
  s.name = k == 1 ? "inv_log" : "inv_log" + std::to_string(k);
  s.direction = Direction::decreasing;
  s.domain = kFromTwo;
  s.eval = [k](double x) { return 1.0 / ipow(std::log(x), k); };
  s.inverse_eval = [k](double y) { return std::exp(1.0 / root(y, k)); };
  s.antideriv_eval = [k](double x) { return inv_log_power_antideriv(k, x); };
  if (k == 1) {
    s.integral = [](double u, double v) { return li_offset_diff(u, v); };
  } else {
    s.integral = gk_integral([k](double t) { return 1.0 / ipow(std::log(t), k); });
  }
  const FuncSpec base = log_power_fn(k);
  s.recip_antideriv_eval = base.antideriv_eval;
  return s;
}

FuncSpec c_xpow_fn(double c, int n) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c_xpow: c must be positive");
  if (n < 1) throw DomainError("c_xpow: n must be >= 1");
  FuncSpec s;
  s.name = family_name("c_xpow", c, n, true);
  s.direction = Direction::decreasing;
  s.domain = kPositive;
  const double inv_n = 1.0 / n;
  if (n == 1) {
    s.eval = [c](double x) { return c / x; };
    s.inverse_eval = [c](double y) { return c / y; };
    s.antideriv_eval = [c](double x) { return c * std::log(x); };
    s.integral = [c](double u, double v) { return c * std::log1p((v - u) / u); };
  } else {
    s.eval = [c, inv_n](double x) { return c * std::pow(x, -inv_n); };
    s.inverse_eval = [c, n](double y) { return std::pow(c / y, n); };
    s.antideriv_eval = [c, n, inv_n](double x) {
      return c * n / (n - 1.0) * std::pow(x, 1.0 - inv_n);
    };
  }
  const double e = 1.0 + inv_n;
  s.recip_antideriv_eval = [c, e](double x) { return std::pow(x, e) / (c * e); };
  return s;
}

FuncSpec a_over_x_fn(double a) {
  FuncSpec s = c_xpow_fn(a, 1);
  s.name = family_name("a_over_x", a, 1, false);
  return s;
}

std::vector<FuncSpec> builtin_catalog() {
  return {identity_fn(),       sqrt_fn(),           log_power_fn(1),
          log_power_fn(2),     log_power_fn(3),     inv_log_power_fn(1),
          inv_log_power_fn(2), inv_log_power_fn(3), c_xpow_fn(3.0, 2),
          c_xpow_fn(2.0, 3),   a_over_x_fn(4.0)};
}

FuncSpec find_builtin(const std::string& name, double c, int n) {
  if (name == "identity") return identity_fn();
  if (name == "sqrt") return sqrt_fn();
  if (name == "log") return log_power_fn(1);
  if (name == "log2") return log_power_fn(2);
  if (name == "log3") return log_power_fn(3);
  if (name == "inv_log") return inv_log_power_fn(1);
  if (name == "inv_log2") return inv_log_power_fn(2);
  if (name == "inv_log3") return inv_log_power_fn(3);
  if (name == "c_xpow") return c_xpow_fn(c, n);
  if (name == "a_over_x") return a_over_x_fn(c);
  throw DomainError("unknown function '" + name + "'");
}

ReciprocalSpec make_reciprocal(const FuncSpec& base, double numerator) {
  if (base.direction != Direction::increasing) {
    throw DomainError("make_reciprocal: base '" + base.name + "' is not increasing");
  }
  if (!(numerator > 0.0) || !std::isfinite(numerator)) {
    throw DomainError("make_reciprocal: numerator must be positive");
  }
  if (!base.has_recip()) {
    throw DomainError("make_reciprocal: base '" + base.name + "' has no 1/f antiderivative");
  }

  ReciprocalSpec r{base, numerator, {}};
  FuncSpec& g = r.spec;
  std::ostringstream name;
  name.precision(17);
  name << numerator << "/" << base.name;
  g.name = name.str();
  g.direction = Direction::decreasing;
  g.domain = base.domain;
  g.eval = [f = base.eval, numerator](double x) { return numerator / f(x); };
  g.inverse_eval = [finv = base.inverse_eval, numerator](double y) {
    return finv(numerator / y);
  };
  g.antideriv_eval = [G = base.recip_antideriv_eval, numerator](double x) {
    return numerator * G(x);
  };
  g.integral = [base, numerator](double u, double v) {
    return numerator * base.recip_definite_integral(u, v);
  };
  g.recip_antideriv_eval = [F = base.antideriv_eval, numerator](double x) {
    return F(x) / numerator;
  };
  g.recip_integral = [base, numerator](double u, double v) {
    return base.definite_integral(u, v) / numerator;
  };
  return r;
}

namespace {

// Central difference where both sides are in the domain, otherwise a
// second-order one-sided difference.
double fd_derivative(const UnaryFn& F, const Domain& dom, double x, double h) {
  if (dom.contains(x - h)) return (F(x + h) - F(x - h)) / (2.0 * h);
  return (-3.0 * F(x) + 4.0 * F(x + h) - F(x + 2.0 * h)) / (2.0 * h);
}

}  // namespace

ValidationReport validate(const FuncSpec& spec, std::span<const double> grid,
                          const Tolerances& tol) {
  if (grid.empty()) throw DomainError("validate: empty grid");
  for (double x : grid) {
    if (!spec.domain.contains(x)) throw DomainError("validate: grid point outside domain");
  }

  ValidationReport rep;
  std::vector<double> xs(grid.begin(), grid.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto note_fd = [&](double fd, double exact) {
    const double abs_err = std::fabs(fd - exact);
    rep.max_fd_abs_error = std::max(rep.max_fd_abs_error, abs_err);
    const double rel = exact != 0.0 ? abs_err / std::fabs(exact) : abs_err;
    rep.max_fd_rel_error = std::max(rep.max_fd_rel_error, rel);
  };

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double y = spec.eval(x);
    const double back = spec.inverse_eval(y);
    rep.max_roundtrip_error =
        std::max(rep.max_roundtrip_error, std::fabs(back - x) / (1.0 + std::fabs(x)));

    if (i > 0) {
      const double prev = spec.eval(xs[i - 1]);
      const bool ok = spec.direction == Direction::increasing ? prev < y : prev > y;
      if (!ok) ++rep.monotonicity_violations;
    }

    const double h = tol.fd_step_rel * x;
    note_fd(fd_derivative(spec.antideriv_eval, spec.domain, x, h), y);
    if (spec.has_recip()) {
      note_fd(fd_derivative(spec.recip_antideriv_eval, spec.domain, x, h), 1.0 / y);
    }
  }

  rep.passed = rep.max_roundtrip_error <= tol.roundtrip_rel &&
               rep.monotonicity_violations == 0 && rep.max_fd_rel_error <= tol.fd_rel;
  return rep;
}

}  // namespace fracgap
