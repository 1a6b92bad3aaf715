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

#include "fracgap/gapseq.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>

#include <omp.h>

#include "fracgap/compensated_sum.hpp"
#include "fracgap/errors.hpp"
#include "fracgap/fracint.hpp"
#include "fracgap/kernels/parallel_sum.hpp"
#include "fracgap/specialfn.hpp"

namespace fracgap {

namespace {

constexpr std::int64_t kBlock = 1 << 16;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs body(i) for i in [first, last) in parallel; the first exception
// thrown by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::int64_t first, std::int64_t last, const Body& body) {
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = first; i < last; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

double as_double(std::uint64_t v) { return static_cast<double>(v); }

void require_range(std::size_t first, std::size_t last, std::size_t max, const char* what) {
  if (first < 1 || first > last || last > max) {
    std::ostringstream msg;
    msg << what << ": index range [" << first << ", " << last << "] outside [1, " << max << "]";
    throw DomainError(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SeqSource

SeqSource::SeqSource(std::string name, std::size_t size, TermFn term)
    : name_(std::move(name)), size_(size), term_(std::move(term)) {}

SeqSource SeqSource::primes(const PrimeTable& table) {
  return SeqSource("primes", table.count(),
                   [&table](std::size_t n) { return table.prime(n); });
}

SeqSource SeqSource::squares(std::size_t count, std::uint64_t first_root) {
  if (first_root == 0) throw DomainError("squares: first root must be positive");
  std::ostringstream name;
  name << "squares(from=" << first_root << ")";
  return SeqSource(name.str(), count, [first_root](std::size_t n) {
    const std::uint64_t r = first_root + n - 1;
    return r * r;
  });
}

SeqSource SeqSource::from_terms(std::string name, std::vector<std::uint64_t> terms) {
  if (!terms.empty() && terms.front() == 0) throw DomainError(name + ": terms must be positive");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1]) throw DomainError(name + ": terms must strictly increase");
  }
  const std::size_t size = terms.size();
  return SeqSource(std::move(name), size,
                   [terms = std::move(terms)](std::size_t n) { return terms[n - 1]; });
}

std::uint64_t SeqSource::at(std::size_t n) const {
  if (n < 1 || n > size_) {
    std::ostringstream msg;
    msg << name_ << ": index " << n << " out of range [1, " << size_ << "]";
    throw DomainError(msg.str());
  }
  return term_(n);
}

// ---------------------------------------------------------------------------
// R, S, T sequences

SandwichCheck check_sandwich(const TheoremSequences& t) {
  SandwichCheck c;
  const double w = t.bound();
  c.r_in_range = t.R >= 0.0 && t.R < w;
  c.s_le_r = t.S <= t.R;
  c.r_lt_t_plus_bound = t.R < t.T + w;
  c.s_le_t = t.S <= t.T;
  c.r_le_t = t.R <= t.T;
  return c;
}

TheoremSequences compute_RST(const SeqSource& seq, const FuncSpec& f, std::size_t n,
                             const Tolerances& tol) {
  if (n < 2 || n > seq.size()) {
    std::ostringstream msg;
    msg << "compute_RST: n = " << n << " outside [2, " << seq.size() << "]";
    throw DomainError(msg.str());
  }
  if (f.direction != Direction::increasing) {
    throw DomainError("compute_RST: " + f.name + " is not increasing");
  }
  const std::uint64_t a1 = seq.at(1);
  const std::uint64_t an = seq.at(n);
  if (!f.domain.contains(as_double(a1))) {
    throw DomainError("compute_RST: a_1 outside the domain of " + f.name);
  }
  if (!(f.eval(as_double(a1)) > 0.0)) {
    throw DomainError("compute_RST: " + f.name + " is not positive on [a_1, a_n]");
  }

  TheoremSequences out;
  out.n = n;
  out.a_first = a1;
  out.a_n = an;

  const ReciprocalSpec g = make_reciprocal(f, as_double(an));
  out.R = integrate_frac_exact(g.spec, as_double(a1), as_double(an), tol) / as_double(an);

  const double integral = f.recip_definite_integral(as_double(a1), as_double(an));
  const auto& eval = f.eval;
  const auto last = static_cast<std::int64_t>(n);
  const CompensatedSum left = kernels::parallel_sum(1, last, [&](std::int64_t i) {
    const auto k = static_cast<std::size_t>(i);
    return as_double(seq.gap(k)) / eval(as_double(seq.at(k)));
  });
  const CompensatedSum right = kernels::parallel_sum(1, last, [&](std::int64_t i) {
    const auto k = static_cast<std::size_t>(i);
    return as_double(seq.gap(k)) / eval(as_double(seq.at(k + 1)));
  });

  CompensatedSum s(integral);
  s.add(-left);
  CompensatedSum t(integral);
  t.add(-right);
  out.S = s.value();
  out.T = t.value();
  return out;
}

std::vector<std::size_t> geometric_grid(std::size_t size, double base) {
  if (!(base > 1.0)) throw DomainError("geometric_grid: base must exceed 1");
  std::vector<std::size_t> grid;
  if (size < 2) return grid;
  grid.push_back(2);
  if (size >= 3) grid.push_back(3);
  for (double v = base; v <= static_cast<double>(size); v *= base) {
    grid.push_back(static_cast<std::size_t>(std::ceil(v - 1e-9)));
  }
  grid.push_back(size);
  std::erase_if(grid, [size](std::size_t n) { return n < 2 || n > size; });
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// ---------------------------------------------------------------------------
// Residuals

ResidualSample residual(const SeqSource& seq, const FuncSpec& f, std::size_t n) {
  if (n < 1 || n + 1 > seq.size()) {
    std::ostringstream msg;
    msg << "residual: n = " << n << " needs a_{n+1} (sequence size " << seq.size() << ")";
    throw DomainError(msg.str());
  }
  const double lo = as_double(seq.at(n));
  const double hi = as_double(seq.at(n + 1));
  if (!f.domain.contains(lo) || !f.domain.contains(hi)) {
    throw DomainError("residual: a_n outside the domain of " + f.name);
  }
  ResidualSample r;
  r.n = n;
  r.a_n = seq.at(n);
  r.d = seq.gap(n);
  r.fn_name = f.name;
  const double d = as_double(r.d);
  const double left = d / f.eval(lo);
  const double right = d / f.eval(hi);
  r.residual = f.recip_definite_integral(lo, hi) - left;
  r.lower_bound = -(left - right);
  return r;
}

ResidualSummary residual_sweep(const SeqSource& seq, const FuncSpec& f, std::size_t n_first,
                               std::size_t n_last,
                               const std::function<void(const ResidualSample&)>& sink) {
  if (seq.size() < 2) throw DomainError("residual_sweep: sequence too short");
  require_range(n_first, n_last, seq.size() - 1, "residual_sweep");

  ResidualSummary summary;
  std::vector<ResidualSample> block;
  for (auto lo = static_cast<std::int64_t>(n_first); lo <= static_cast<std::int64_t>(n_last);
       lo += kBlock) {
    const std::int64_t hi = std::min<std::int64_t>(lo + kBlock, n_last + 1);
    block.assign(static_cast<std::size_t>(hi - lo), {});
    parallel_for(lo, hi, [&](std::int64_t i) {
      block[static_cast<std::size_t>(i - lo)] = residual(seq, f, static_cast<std::size_t>(i));
    });
    for (const auto& r : block) {
      ++summary.count;
      if (!r.in_bounds()) ++summary.bound_violations;
      if (summary.count == 1) {
        summary.min_residual = summary.max_residual = r.residual;
      } else {
        summary.min_residual = std::min(summary.min_residual, r.residual);
        summary.max_residual = std::max(summary.max_residual, r.residual);
      }
      if (sink) sink(r);
    }
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Assumption sums

AssumptionPartialSums assumption_partial_sums(const PrimeTable& table, const FuncSpec& f,
                                              std::size_t N) {
  if (N < 1 || N + 1 > table.count()) {
    std::ostringstream msg;
    msg << "assumption_partial_sums: N = " << N << " needs N + 1 <= " << table.count();
    throw DomainError(msg.str());
  }
  if (!f.domain.contains(2.0)) throw DomainError("assumption sums: 2 outside domain of " + f.name);

  const auto ps = table.primes();
  const auto last = static_cast<std::int64_t>(N);
  AssumptionPartialSums out;
  out.N = N;
  out.fn_name = f.name;
  // d^2 / (p p') == d/p - d/p'
  out.L1 = kernels::parallel_sum(0, last, [ps](std::int64_t i) {
             const double p = ps[static_cast<std::size_t>(i)];
             const double q = ps[static_cast<std::size_t>(i) + 1];
             const double d = q - p;
             return d / p * (d / q);
           }).value();
  // d (log p' - log p) / (log p log p') == d/log p - d/log p'
  out.L2 = kernels::parallel_sum(0, last, [ps](std::int64_t i) {
             const double p = ps[static_cast<std::size_t>(i)];
             const double q = ps[static_cast<std::size_t>(i) + 1];
             const double d = q - p;
             return d * std::log1p(d / p) / (std::log(p) * std::log(q));
           }).value();
  const auto& eval = f.eval;
  out.Lf = kernels::parallel_sum(0, last, [ps, &eval](std::int64_t i) {
             const double p = ps[static_cast<std::size_t>(i)];
             const double q = ps[static_cast<std::size_t>(i) + 1];
             const double d = q - p;
             return d / eval(p) - d / eval(q);
           }).value();
  return out;
}

std::vector<AssumptionCheckpoint> assumption_audit(const PrimeTable& table, const FuncSpec& f,
                                                   std::vector<std::size_t> checkpoints) {
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  std::vector<AssumptionCheckpoint> out;
  out.reserve(checkpoints.size());
  for (std::size_t N : checkpoints) {
    AssumptionCheckpoint cp;
    cp.sums = assumption_partial_sums(table, f, N);
    if (!out.empty()) {
      const auto& prev = out.back().sums;
      const double dlogN = std::log(static_cast<double>(N) / static_cast<double>(prev.N));
      auto slope = [dlogN](double now, double before) {
        return (now > 0.0 && before > 0.0) ? std::log(now / before) / dlogN : kNaN;
      };
      cp.slope_L1 = slope(cp.sums.L1, prev.L1);
      cp.slope_L2 = slope(cp.sums.L2, prev.L2);
      cp.slope_Lf = slope(cp.sums.Lf, prev.Lf);
    }
    out.push_back(std::move(cp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Comparison terms

ComparisonTerms comparison_terms(const PrimeTable& table, std::size_t k) {
  if (k < 1 || k + 1 > table.count()) {
    std::ostringstream msg;
    msg << "comparison_terms: k = " << k << " out of range [1, " << table.count() - 1 << "]";
    throw DomainError(msg.str());
  }
  ComparisonTerms c;
  c.k = k;
  c.p = table.prime(k);
  c.p_next = table.prime(k + 1);
  const double p = as_double(c.p);
  const double d = as_double(c.p_next - c.p);
  const double l1 = std::log(p);
  const double l2 = std::log(as_double(c.p_next));
  const double dl = std::log1p(d / p);  // l2 - l1 without cancellation
  c.a = d * dl / (l1 * l2);
  c.b = d * dl * (l1 + l2) / (l1 * l1 * l2 * l2);
  c.holds = 0.0 < c.b && c.b < c.a;
  c.log_condition = l1 + l2 < l1 * l2;
  return c;
}

std::vector<ComparisonTerms> comparison_scan(const PrimeTable& table, std::size_t k_first,
                                             std::size_t k_last) {
  require_gaps(table);
  require_range(k_first, k_last, table.count() - 1, "comparison_scan");
  std::vector<ComparisonTerms> out(k_last - k_first + 1);
  parallel_for(static_cast<std::int64_t>(k_first), static_cast<std::int64_t>(k_last) + 1,
               [&](std::int64_t k) {
                 out[static_cast<std::size_t>(k) - k_first] =
                     comparison_terms(table, static_cast<std::size_t>(k));
               });
  return out;
}

// ---------------------------------------------------------------------------
// Theta intervals

std::size_t theta_max_m(const PrimeTable& table, double theta) {
  if (!(theta > 0.0)) throw DomainError("theta must be positive");
  const double cutoff = static_cast<double>(table.limit()) / (1.0 + theta);
  const auto ps = table.primes();
  std::size_t m = static_cast<std::size_t>(
      std::upper_bound(ps.begin(), ps.end(), static_cast<std::uint64_t>(cutoff)) - ps.begin());
  while (m > 0 && (1.0 + theta) * ps[m - 1] > static_cast<double>(table.limit())) --m;
  return m;
}

ThetaScanReport theta_interval_scan(const PrimeTable& table, double theta, std::size_t m_max) {
  if (!(theta > 0.0)) throw DomainError("theta must be positive");
  require_range(1, m_max, table.count(), "theta_interval_scan");
  if ((1.0 + theta) * as_double(table.prime(m_max)) > as_double(table.limit())) {
    throw DomainError("theta_interval_scan: (1 + theta) p_m_max exceeds the table limit");
  }

  ThetaScanReport rep;
  rep.theta = theta;
  rep.m_max = m_max;
  std::vector<std::uint8_t> empty(m_max, 0);
  parallel_for(1, static_cast<std::int64_t>(m_max) + 1, [&](std::int64_t m) {
    const double p = as_double(table.prime(static_cast<std::size_t>(m)));
    if (count_primes_between(table, p, (1.0 + theta) * p) == 0) {
      empty[static_cast<std::size_t>(m) - 1] = 1;
    }
  });
  for (std::size_t m = 1; m <= m_max; ++m) {
    if (!empty[m - 1]) continue;
    const std::uint64_t p = table.prime(m);
    rep.violations.push_back({m, p, (1.0 + theta) * as_double(p)});
    rep.largest_violating_p = p;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Statistic sweeps

const char* to_string(StatKind k) {
  switch (k) {
    case StatKind::westzynthius: return "westzynthius";
    case StatKind::cramer: return "cramer";
    case StatKind::merit3: return "merit3";
  }
  return "?";
}

StatKind parse_stat_kind(const std::string& s) {
  if (s == "westzynthius") return StatKind::westzynthius;
  if (s == "cramer") return StatKind::cramer;
  if (s == "merit3") return StatKind::merit3;
  throw DomainError("unknown statistic '" + s + "'");
}

namespace {

StatRow stat_row(const PrimeTable& table, std::size_t n, StatKind kind) {
  const GapRecord g = gap_at(table, n);
  StatRow row;
  row.n = n;
  row.p = g.p;
  row.p_next = g.p_next;
  switch (kind) {
    case StatKind::westzynthius:
      row.value = g.merit;
      row.comparand = li_offset_diff(as_double(g.p), as_double(g.p_next));
      row.difference = row.value - row.comparand;
      break;
    case StatKind::cramer: {
      const double p = as_double(g.p);
      const double q = as_double(g.p_next);
      const double l1 = std::log(p);
      const double l2 = std::log(q);
      row.value = g.merit2;
      // (q / l2) (l2 / l1 - 1) with l2 - l1 taken as log1p(d / p)
      row.comparand = q * std::log1p(as_double(g.d) / p) / (l1 * l2);
      row.difference = std::fabs(row.comparand - row.value);
      row.chain_term = q / (static_cast<double>(n + 1) * l2);
      break;
    }
    case StatKind::merit3:
      row.value = g.merit3;
      break;
  }
  return row;
}

}  // namespace

StatSummary stat_sweep_stream(const PrimeTable& table, std::size_t n_first, std::size_t n_last,
                              StatKind kind, double min_prime,
                              const std::function<void(const StatRow&)>& sink) {
  require_gaps(table);
  require_range(n_first, n_last, table.count() - 1, "stat_sweep");

  StatSummary sum;
  sum.kind = kind;
  std::vector<StatRow> block;
  for (auto lo = static_cast<std::int64_t>(n_first); lo <= static_cast<std::int64_t>(n_last);
       lo += kBlock) {
    const std::int64_t hi = std::min<std::int64_t>(lo + kBlock, n_last + 1);
    block.assign(static_cast<std::size_t>(hi - lo), {});
    parallel_for(lo, hi, [&](std::int64_t i) {
      block[static_cast<std::size_t>(i - lo)] = stat_row(table, static_cast<std::size_t>(i), kind);
    });

    for (auto& row : block) {
      ++sum.rows;
      if (as_double(row.p) >= min_prime) {
        if (sum.tracked++ == 0) {
          sum.sup_value = sum.inf_value = row.value;
          sum.argsup_value_p = row.p;
          sum.sup_comparand = sum.inf_comparand = row.comparand;
          sum.max_difference = std::fabs(row.difference);
        } else {
          if (row.value > sum.sup_value) {
            sum.sup_value = row.value;
            sum.argsup_value_p = row.p;
          }
          sum.inf_value = std::min(sum.inf_value, row.value);
          if (!std::isnan(row.comparand)) {
            sum.sup_comparand = std::max(sum.sup_comparand, row.comparand);
            sum.inf_comparand = std::min(sum.inf_comparand, row.comparand);
            sum.max_difference = std::max(sum.max_difference, std::fabs(row.difference));
          }
        }
        row.sup_value = sum.sup_value;
        row.inf_value = sum.inf_value;
        row.sup_comparand = sum.sup_comparand;
        row.inf_comparand = sum.inf_comparand;
      }
      if (sink) sink(row);
    }
  }
  return sum;
}

StatSweep stat_sweep(const PrimeTable& table, std::size_t n_first, std::size_t n_last,
                     StatKind kind, double min_prime) {
  StatSweep out;
  out.summary = stat_sweep_stream(table, n_first, n_last, kind, min_prime,
                                  [&out](const StatRow& r) { out.rows.push_back(r); });
  return out;
}

}  // namespace fracgap
