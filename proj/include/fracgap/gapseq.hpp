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
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "fracgap/config.hpp"
#include "fracgap/funcspec.hpp"
#include "fracgap/primes.hpp"

namespace fracgap {

/// A strictly increasing sequence of positive integers a_1 < a_2 < ...,
/// indexed from 1. Accessors are const and safe for concurrent reads.
class SeqSource {
 public:
  using TermFn = std::function<std::uint64_t(std::size_t)>;

  SeqSource(std::string name, std::size_t size, TermFn term);

  /// The primes of `table`; the table must outlive the source.
  static SeqSource primes(const PrimeTable& table);
  /// a_n = (first_root + n - 1)^2.
  static SeqSource squares(std::size_t count, std::uint64_t first_root = 2);
  /// Explicit terms; rejects non-increasing input.
  static SeqSource from_terms(std::string name, std::vector<std::uint64_t> terms);

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  std::uint64_t at(std::size_t n) const;
  /// d_n = a_{n+1} - a_n.
  std::uint64_t gap(std::size_t n) const { return at(n + 1) - at(n); }

 private:
  std::string name_;
  std::size_t size_;
  TermFn term_;
};

/// One sample of
///   R_n = (1/a_n) int_{a_1}^{a_n} {a_n / f(x)} dx
///   S_n = int_{a_1}^{a_n} dx/f(x) - sum_{i<n} d_i / f(a_i)
///   T_n = int_{a_1}^{a_n} dx/f(x) - sum_{i<n} d_i / f(a_{i+1})
struct TheoremSequences {
  std::size_t n = 0;
  std::uint64_t a_first = 0;
  std::uint64_t a_n = 0;
  double R = 0.0;
  double S = 0.0;
  double T = 0.0;

  /// 1 - a_1/a_n: the width bound on R_n.
  double bound() const {
    return 1.0 - static_cast<double>(a_first) / static_cast<double>(a_n);
  }
};

/// Provable relations (all must hold) plus the stricter R_n <= T_n, which
/// does not hold in general and is only measured.
struct SandwichCheck {
  bool r_in_range = false;      // 0 <= R_n < 1 - a_1/a_n
  bool s_le_r = false;          // S_n <= R_n
  bool r_lt_t_plus_bound = false;  // R_n < T_n + (1 - a_1/a_n)
  bool s_le_t = false;          // S_n <= T_n
  bool r_le_t = false;          // measured only

  bool provable_ok() const { return r_in_range && s_le_r && r_lt_t_plus_bound && s_le_t; }
};

SandwichCheck check_sandwich(const TheoremSequences& t);

/// Requires n >= 2, f increasing and positive on [a_1, a_n]. R_n costs
/// about a_n / f(a_1) breakpoints.
TheoremSequences compute_RST(const SeqSource& seq, const FuncSpec& f, std::size_t n,
                             const Tolerances& tol = default_tolerances());

/// {2, 3} together with ceil(base^k) for k >= 1, and `size` itself, all <= size.
std::vector<std::size_t> geometric_grid(std::size_t size, double base);

struct ResidualSample {
  std::size_t n = 0;
  std::uint64_t a_n = 0;
  std::uint64_t d = 0;
  /// int_{a_n}^{a_{n+1}} dx/f(x) - d_n/f(a_n)
  double residual = 0.0;
  /// -(d_n/f(a_n) - d_n/f(a_{n+1})); for increasing f the residual lies in [lower_bound, 0].
  double lower_bound = 0.0;
  std::string fn_name;

  bool in_bounds() const { return residual >= lower_bound && residual <= 0.0; }
};

ResidualSample residual(const SeqSource& seq, const FuncSpec& f, std::size_t n);

struct ResidualSummary {
  std::size_t count = 0;
  std::size_t bound_violations = 0;
  double min_residual = std::numeric_limits<double>::quiet_NaN();
  double max_residual = std::numeric_limits<double>::quiet_NaN();
};

/// Residuals for n in [n_first, n_last], computed in parallel blocks and
/// delivered to `sink` in index order.
ResidualSummary residual_sweep(const SeqSource& seq, const FuncSpec& f, std::size_t n_first,
                               std::size_t n_last,
                               const std::function<void(const ResidualSample&)>& sink = {});

/// Partial sums of the telescoped gap series
///   L1 = sum_{i<=N} (d_i/p_i - d_i/p_{i+1})
///   L2 = sum_{i<=N} (d_i/log p_i - d_i/log p_{i+1})
///   Lf = sum_{i<=N} (d_i/f(p_i) - d_i/f(p_{i+1}))
struct AssumptionPartialSums {
  std::size_t N = 0;
  double L1 = 0.0;
  double L2 = 0.0;
  double Lf = 0.0;
  std::string fn_name;
};

AssumptionPartialSums assumption_partial_sums(const PrimeTable& table, const FuncSpec& f,
                                              std::size_t N);

struct AssumptionCheckpoint {
  AssumptionPartialSums sums;
  // d log L / d log N against the previous checkpoint; NaN for the first.
  double slope_L1 = std::numeric_limits<double>::quiet_NaN();
  double slope_L2 = std::numeric_limits<double>::quiet_NaN();
  double slope_Lf = std::numeric_limits<double>::quiet_NaN();
};

/// Partial sums at each checkpoint (ascending, each <= count - 1) with
/// log-log growth slopes. Reports numbers only; no convergence verdict.
std::vector<AssumptionCheckpoint> assumption_audit(const PrimeTable& table, const FuncSpec& f,
                                                   std::vector<std::size_t> checkpoints);

struct ComparisonTerms {
  std::size_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t p_next = 0;
  double a = 0.0;  // d_k/log p_k - d_k/log p_{k+1}
  double b = 0.0;  // d_k/(log p_k)^2 - d_k/(log p_{k+1})^2
  bool holds = false;          // 0 < b < a
  bool log_condition = false;  // log p_k + log p_{k+1} < log p_k * log p_{k+1}
};

ComparisonTerms comparison_terms(const PrimeTable& table, std::size_t k);
std::vector<ComparisonTerms> comparison_scan(const PrimeTable& table, std::size_t k_first,
                                             std::size_t k_last);

struct ThetaViolation {
  std::size_t m = 0;
  std::uint64_t p_m = 0;
  double upper = 0.0;  // (1 + theta) p_m
};

struct ThetaScanReport {
  double theta = 0.0;
  std::size_t m_max = 0;
  std::vector<ThetaViolation> violations;
  std::uint64_t largest_violating_p = 0;  // 0 when there is none
};

/// Largest m with (1 + theta) p_m <= table limit (0 if none).
std::size_t theta_max_m(const PrimeTable& table, double theta);

/// For m = 1..m_max, flags every m where (p_m, (1 + theta) p_m] has no prime.
ThetaScanReport theta_interval_scan(const PrimeTable& table, double theta, std::size_t m_max);

enum class StatKind { westzynthius, cramer, merit3 };

const char* to_string(StatKind k);
StatKind parse_stat_kind(const std::string& s);

/// Per-n statistic.
///   westzynthius: value = d/log p,     comparand = Li(p') - Li(p), difference = value - comparand
///   cramer:       value = d/(log p)^2, comparand = C_n = (p'/log p')(log p'/log p - 1),
///                 difference = |C_n - value|, chain_term = p'/((n+1) log p')
///   merit3:       value = d/(log p)^3; comparand/difference NaN
/// Running extrema only include n with p_n >= min_prime; before that they are NaN.
struct StatRow {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t p_next = 0;
  double value = 0.0;
  double comparand = std::numeric_limits<double>::quiet_NaN();
  double difference = std::numeric_limits<double>::quiet_NaN();
  double chain_term = std::numeric_limits<double>::quiet_NaN();
  double sup_value = std::numeric_limits<double>::quiet_NaN();
  double inf_value = std::numeric_limits<double>::quiet_NaN();
  double sup_comparand = std::numeric_limits<double>::quiet_NaN();
  double inf_comparand = std::numeric_limits<double>::quiet_NaN();
};

struct StatSummary {
  StatKind kind = StatKind::merit3;
  std::size_t rows = 0;
  std::size_t tracked = 0;
  double sup_value = std::numeric_limits<double>::quiet_NaN();
  double inf_value = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t argsup_value_p = 0;
  double sup_comparand = std::numeric_limits<double>::quiet_NaN();
  double inf_comparand = std::numeric_limits<double>::quiet_NaN();
  double max_difference = std::numeric_limits<double>::quiet_NaN();
};

struct StatSweep {
  std::vector<StatRow> rows;
  StatSummary summary;
};

/// n runs over [n_first, n_last] (1-based, n_last <= count - 1). Rows are
/// computed in parallel blocks and handed to `sink` in index order, so
/// memory stays bounded by the block size.
StatSummary stat_sweep_stream(const PrimeTable& table, std::size_t n_first, std::size_t n_last,
                              StatKind kind, double min_prime,
                              const std::function<void(const StatRow&)>& sink);

StatSweep stat_sweep(const PrimeTable& table, std::size_t n_first, std::size_t n_last,
                     StatKind kind, double min_prime = 11.0);

}  // namespace fracgap
