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

#include "fracgap/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include <omp.h>

#include <CLI11.hpp>

#include "fracgap/errors.hpp"
#include "fracgap/fracint.hpp"
#include "fracgap/funcspec.hpp"
#include "fracgap/gapseq.hpp"
#include "fracgap/prime_cache.hpp"
#include "fracgap/primes.hpp"
#include "fracgap/report.hpp"
#include "fracgap/specialfn.hpp"

#ifndef FRACGAP_VERSION
#define FRACGAP_VERSION "0.0.0"
#endif

namespace fracgap::cli {

namespace {

using report::ReportRow;

struct Common {
  std::uint64_t limit = 1'000'000;
  std::string format = "csv";
  std::string out;
  int threads = 0;
  double tol = 1e-10;
  double seed_schedule = 2.0;
  std::string cache;
  double min_prime = 11.0;
};

struct Options {
  Common common;
  // fracint
  std::string fn = "identity";
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  int n = 2;
  // zeta / gamma
  int zeta_n = 2;
  std::uint64_t zeta_c = 1;
  std::uint64_t gamma_a = 1;
  std::uint64_t terms = 10'000'000;
  // sequences
  std::string seq = "primes";
  std::uint64_t first_root = 2;
  std::size_t from = 1;
  std::size_t to = 0;
  std::vector<std::size_t> checkpoints;
  double theta = 1.0;
  std::size_t m_max = 0;
  std::string stat_kind;
};

// A subcommand writes its report through this; it owns the writer and the
// envelope so each handler only produces rows.
class Sink {
 public:
  Sink(std::ostream& out, report::Format fmt, const std::string& sub, std::vector<std::string> cols)
      : writer_(out, fmt, "fracgap." + sub + ".v1", std::move(cols)) {
    env_.subcommand = sub;
    env_.version = FRACGAP_VERSION;
  }
  void row(const ReportRow& r) { writer_.write(r); }
  ReportRow& parameters() { return env_.parameters; }
  ReportRow& summary() { return env_.summary; }
  void finish(double wall) {
    env_.wall_time_s = wall;
    writer_.finish(env_);
  }

 private:
  report::ReportWriter writer_;
  report::Envelope env_;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--limit", c.limit, "Sieve limit / largest sequence term")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{0xFFFFFFFFull}));
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Write the report to FILE instead of stdout");
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--tol", c.tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--seed-schedule", c.seed_schedule, "Geometric base of the rst n-grid");
  sub->add_option("--cache", c.cache, "Prime table cache file");
  sub->add_option("--min-prime", c.min_prime, "Smallest p_n included in running sup/inf");
}

PrimeTable load_table(const Common& c) {
  if (!c.cache.empty() && std::filesystem::exists(c.cache)) {
    PrimeTable cached = read_prime_cache(c.cache);
    if (cached.limit() == c.limit) return cached;
  }
  PrimeTable table = sieve(c.limit);
  if (!c.cache.empty()) write_prime_cache(c.cache, table);
  return table;
}

std::size_t resolve_to(std::size_t to, std::size_t max) { return to == 0 ? max : to; }

using Handler = std::function<void(const Options&, std::ostream&, report::Format,
                                   std::optional<Sink>&)>;

void run_fracint(const Options& o, std::ostream& out, report::Format fmt,
                 std::optional<Sink>& sink) {
  const FuncSpec f = find_builtin(o.fn, o.c, o.n);
  const FloorDecomposition dec(f, o.a, o.b);
  const double frac = integrate_frac_exact(f, o.a, o.b);
  const double flo = integrate_floor(f, o.a, o.b);
  const double quad = integrate_frac_quadrature(f, o.a, o.b, o.common.tol);
  sink.emplace(out, fmt, "fracint",
               std::vector<std::string>{"fn", "a", "b", "alpha", "beta", "breakpoints", "frac",
                                        "floor", "plain", "quadrature"});
  ReportRow r;
  r.set("fn", f.name).set("a", o.a).set("b", o.b).set("alpha", dec.alpha())
      .set("beta", dec.beta()).set("breakpoints", dec.count()).set("frac", frac)
      .set("floor", flo).set("plain", f.definite_integral(o.a, o.b)).set("quadrature", quad);
  sink->row(r);
  sink->parameters().set("fn", o.fn).set("a", o.a).set("b", o.b).set("c", o.c).set("n", o.n)
      .set("tol", o.common.tol);
}

void run_zeta(const Options& o, std::ostream& out, report::Format fmt, std::optional<Sink>& sink) {
  const ConstantEstimate est = zeta_via_fracint(o.zeta_n, o.zeta_c);
  const double partial = zeta_series(o.zeta_n, o.zeta_c);
  const double rhs = std::pow(static_cast<double>(o.zeta_c), 1 - o.zeta_n) / (o.zeta_n - 1.0) +
                     partial;
  const double oracle = zeta_series(o.zeta_n, o.terms);
  sink.emplace(out, fmt, "zeta",
               std::vector<std::string>{"n", "c", "estimate", "predicted_error",
                                        "series_partial", "identity_rhs", "series_oracle",
                                        "oracle_terms", "abs_diff_oracle"});
  ReportRow r;
  r.set("n", o.zeta_n).set("c", o.zeta_c).set("estimate", est.value)
      .set("predicted_error", est.predicted_error).set("series_partial", partial)
      .set("identity_rhs", rhs).set("series_oracle", oracle).set("oracle_terms", o.terms)
      .set("abs_diff_oracle", std::fabs(est.value - oracle));
  sink->row(r);
  sink->parameters().set("n", o.zeta_n).set("c", o.zeta_c).set("terms", o.terms);
  sink->summary().set("method", est.method);
}

void run_gamma(const Options& o, std::ostream& out, report::Format fmt,
               std::optional<Sink>& sink) {
  const ConstantEstimate est = gamma_via_fracint(o.gamma_a);
  const double ad = static_cast<double>(o.gamma_a);
  const double closed = std::log(ad) - harmonic(o.gamma_a) + 1.0;
  const double td = static_cast<double>(o.terms);
  const double gamma_oracle = harmonic(o.terms) - std::log(td);
  sink.emplace(out, fmt, "gamma",
               std::vector<std::string>{"a", "estimate", "closed_form", "predicted_error",
                                        "gamma_oracle", "oracle_terms", "one_minus_gamma",
                                        "abs_diff_oracle"});
  ReportRow r;
  r.set("a", o.gamma_a).set("estimate", est.value).set("closed_form", closed)
      .set("predicted_error", est.predicted_error).set("gamma_oracle", gamma_oracle)
      .set("oracle_terms", o.terms).set("one_minus_gamma", 1.0 - gamma_oracle)
      .set("abs_diff_oracle", std::fabs(est.value - (1.0 - gamma_oracle)));
  sink->row(r);
  sink->parameters().set("a", o.gamma_a).set("terms", o.terms);
  sink->summary().set("method", est.method);
}

void run_sieve(const Options& o, std::ostream& out, report::Format fmt,
               std::optional<Sink>& sink) {
  const PrimeTable t = load_table(o.common);
  std::uint64_t max_gap = 0, max_gap_p = 0, gap_sum = 0;
  for (const GapRecord& g : gaps(t)) {
    gap_sum += g.d;
    if (g.d > max_gap) {
      max_gap = g.d;
      max_gap_p = g.p;
    }
  }
  sink.emplace(out, fmt, "sieve",
               std::vector<std::string>{"limit", "count", "last_prime", "max_gap", "max_gap_p",
                                        "gap_sum"});
  ReportRow r;
  r.set("limit", t.limit()).set("count", t.count()).set("last_prime", t.prime(t.count()))
      .set("max_gap", max_gap).set("max_gap_p", max_gap_p).set("gap_sum", gap_sum);
  sink->row(r);
  sink->parameters().set("limit", o.common.limit);
}

void run_gaps(const Options& o, std::ostream& out, report::Format fmt, std::optional<Sink>& sink) {
  const PrimeTable t = load_table(o.common);
  sink.emplace(out, fmt, "gaps",
               std::vector<std::string>{"n", "p", "p_next", "d", "merit", "merit2", "merit3"});
  for (const GapRecord& g : gaps(t)) {
    ReportRow r;
    r.set("n", g.n).set("p", g.p).set("p_next", g.p_next).set("d", g.d).set("merit", g.merit)
        .set("merit2", g.merit2).set("merit3", g.merit3);
    sink->row(r);
  }
  sink->parameters().set("limit", o.common.limit);
}

void run_rst(const Options& o, std::ostream& out, report::Format fmt, std::optional<Sink>& sink) {
  std::optional<PrimeTable> table;
  std::optional<SeqSource> seq;
  if (o.seq == "primes") {
    table = load_table(o.common);
    seq = SeqSource::primes(*table);
  } else {
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(o.common.limit)));
    if (root < o.first_root + 1) throw DomainError("rst: --limit too small for squares");
    seq = SeqSource::squares(root - o.first_root + 1, o.first_root);
  }
  const FuncSpec f = find_builtin(o.fn, o.c, o.n);
  sink.emplace(out, fmt, "rst",
               std::vector<std::string>{"seq", "fn", "n", "a_n", "R", "S", "T", "bound",
                                        "r_in_range", "s_le_r", "r_lt_t_plus_bound", "s_le_t",
                                        "r_le_t"});
  std::size_t instances = 0, provable_failures = 0, r_le_t = 0;
  for (std::size_t n : geometric_grid(seq->size(), o.common.seed_schedule)) {
    const TheoremSequences ts = compute_RST(*seq, f, n);
    const SandwichCheck chk = check_sandwich(ts);
    ++instances;
    if (!chk.provable_ok()) ++provable_failures;
    if (chk.r_le_t) ++r_le_t;
    ReportRow r;
    r.set("seq", seq->name()).set("fn", f.name).set("n", n).set("a_n", ts.a_n).set("R", ts.R)
        .set("S", ts.S).set("T", ts.T).set("bound", ts.bound()).set("r_in_range", chk.r_in_range)
        .set("s_le_r", chk.s_le_r).set("r_lt_t_plus_bound", chk.r_lt_t_plus_bound)
        .set("s_le_t", chk.s_le_t).set("r_le_t", chk.r_le_t);
    sink->row(r);
  }
  sink->parameters().set("seq", o.seq).set("fn", o.fn).set("limit", o.common.limit)
      .set("seed_schedule", o.common.seed_schedule);
  sink->summary().set("instances", instances).set("provable_failures", provable_failures)
      .set("r_le_t_frequency",
           instances ? static_cast<double>(r_le_t) / static_cast<double>(instances) : 0.0);
}

void run_residuals(const Options& o, std::ostream& out, report::Format fmt,
                   std::optional<Sink>& sink) {
  const PrimeTable t = load_table(o.common);
  const SeqSource seq = SeqSource::primes(t);
  const FuncSpec f = find_builtin(o.fn, o.c, o.n);
  sink.emplace(out, fmt, "residuals",
               std::vector<std::string>{"n", "p", "d", "residual", "lower_bound", "in_bounds"});
  const ResidualSummary s = residual_sweep(
      seq, f, o.from, resolve_to(o.to, t.count() - 1), [&](const ResidualSample& r) {
        ReportRow row;
        row.set("n", r.n).set("p", r.a_n).set("d", r.d).set("residual", r.residual)
            .set("lower_bound", r.lower_bound).set("in_bounds", r.in_bounds());
        sink->row(row);
      });
  sink->parameters().set("fn", o.fn).set("limit", o.common.limit);
  sink->summary().set("count", s.count).set("bound_violations", s.bound_violations)
      .set("min_residual", s.min_residual).set("max_residual", s.max_residual);
}

void run_assumptions(const Options& o, std::ostream& out, report::Format fmt,
                     std::optional<Sink>& sink) {
  const PrimeTable t = load_table(o.common);
  const FuncSpec f = find_builtin(o.fn, o.c, o.n);
  std::vector<std::size_t> cps = o.checkpoints;
  if (cps.empty()) cps = {10'000, 100'000, 1'000'000, 10'000'000};
  const std::size_t max_n = t.count() - 1;
  std::erase_if(cps, [max_n](std::size_t n) { return n < 1 || n > max_n; });
  if (cps.empty()) cps.push_back(max_n);
  sink.emplace(out, fmt, "assumptions",
               std::vector<std::string>{"N", "p_N", "L1", "L2", "Lf", "fn", "slope_L1",
                                        "slope_L2", "slope_Lf"});
  for (const AssumptionCheckpoint& cp : assumption_audit(t, f, cps)) {
    ReportRow r;
    r.set("N", cp.sums.N).set("p_N", t.prime(cp.sums.N)).set("L1", cp.sums.L1)
        .set("L2", cp.sums.L2).set("Lf", cp.sums.Lf).set("fn", cp.sums.fn_name)
        .set("slope_L1", cp.slope_L1).set("slope_L2", cp.slope_L2).set("slope_Lf", cp.slope_Lf);
    sink->row(r);
  }
  sink->parameters().set("fn", o.fn).set("limit", o.common.limit);
}

void run_theta(const Options& o, std::ostream& out, report::Format fmt, std::optional<Sink>& sink) {
  const PrimeTable t = load_table(o.common);
  const std::size_t m_max = o.m_max ? o.m_max : theta_max_m(t, o.theta);
  if (m_max == 0) throw DomainError("theta: --limit too small for this theta");
  const ThetaScanReport rep = theta_interval_scan(t, o.theta, m_max);
  sink.emplace(out, fmt, "theta", std::vector<std::string>{"m", "p_m", "upper", "count"});
  for (const ThetaViolation& v : rep.violations) {
    ReportRow r;
    r.set("m", v.m).set("p_m", v.p_m).set("upper", v.upper).set("count", 0);
    sink->row(r);
  }
  sink->parameters().set("theta", o.theta).set("m_max", m_max).set("limit", o.common.limit);
  sink->summary().set("checked", m_max).set("violations", rep.violations.size())
      .set("largest_violating_p", rep.largest_violating_p);
}

void run_stats(const Options& o, std::ostream& out, report::Format fmt, std::optional<Sink>& sink) {
  const StatKind kind = parse_stat_kind(o.stat_kind);
  const PrimeTable t = load_table(o.common);
  require_gaps(t);
  sink.emplace(out, fmt, std::string("stats_") + to_string(kind),
               std::vector<std::string>{"n", "p", "p_next", "value", "comparand", "difference",
                                        "chain_term", "sup_value", "inf_value", "sup_comparand",
                                        "inf_comparand"});
  const StatSummary s = stat_sweep_stream(
      t, o.from, resolve_to(o.to, t.count() - 1), kind, o.common.min_prime,
      [&](const StatRow& row) {
        ReportRow r;
        r.set("n", row.n).set("p", row.p).set("p_next", row.p_next).set("value", row.value)
            .set("comparand", row.comparand).set("difference", row.difference)
            .set("chain_term", row.chain_term).set("sup_value", row.sup_value)
            .set("inf_value", row.inf_value).set("sup_comparand", row.sup_comparand)
            .set("inf_comparand", row.inf_comparand);
        sink->row(r);
      });
  sink->parameters().set("kind", to_string(kind)).set("limit", o.common.limit)
      .set("min_prime", o.common.min_prime);
  sink->summary().set("rows", s.rows).set("tracked", s.tracked).set("sup_value", s.sup_value)
      .set("argsup_value_p", s.argsup_value_p).set("inf_value", s.inf_value)
      .set("sup_comparand", s.sup_comparand).set("inf_comparand", s.inf_comparand)
      .set("max_difference", s.max_difference);
}

void run_comparison(const Options& o, std::ostream& out, report::Format fmt,
                    std::optional<Sink>& sink) {
  const PrimeTable t = load_table(o.common);
  require_gaps(t);
  sink.emplace(out, fmt, "comparison",
               std::vector<std::string>{"k", "p", "p_next", "a_k", "b_k", "holds",
                                        "log_condition"});
  std::size_t failures_from_4 = 0;
  for (const ComparisonTerms& c : comparison_scan(t, o.from, resolve_to(o.to, t.count() - 1))) {
    if (c.k >= 4 && !c.holds) ++failures_from_4;
    ReportRow r;
    r.set("k", c.k).set("p", c.p).set("p_next", c.p_next).set("a_k", c.a).set("b_k", c.b)
        .set("holds", c.holds).set("log_condition", c.log_condition);
    sink->row(r);
  }
  sink->parameters().set("limit", o.common.limit);
  sink->summary().set("failures_k_ge_4", failures_from_4);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional-part integrals and prime-gap sequence statistics", "fracgap"};
  app.require_subcommand(1);
  Options o;

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](const char* name, const char* desc, Handler h) {
    CLI::App* s = app.add_subcommand(name, desc);
    add_common(s, o.common);
    handlers.emplace_back(s, std::move(h));
    return s;
  };

  auto* fracint = sub("fracint", "Exact and quadrature integral of {f(x)} over [a, b]", run_fracint);
  fracint->add_option("--fn", o.fn, "Catalog function")->required();
  fracint->add_option("--a", o.a, "Lower endpoint")->required();
  fracint->add_option("--b", o.b, "Upper endpoint")->required();
  fracint->add_option("--c", o.c, "Family coefficient (c_xpow, a_over_x)");
  fracint->add_option("--n", o.n, "Family exponent (c_xpow)");

  auto* zeta = sub("zeta", "zeta(n) from the fractional-part identity", run_zeta);
  zeta->add_option("--n", o.zeta_n, "zeta argument (>= 2)")->required();
  zeta->add_option("--c", o.zeta_c, "Truncation parameter c (>= 1)")->required();
  zeta->add_option("--terms", o.terms, "Terms in the series oracle");

  auto* gamma = sub("gamma", "1 - gamma from (1/a) int_1^a {a/x} dx", run_gamma);
  gamma->add_option("--a", o.gamma_a, "Parameter a (>= 1)")->required();
  gamma->add_option("--terms", o.terms, "Harmonic terms in the gamma oracle");

  sub("sieve", "Sieve primes and summarize", run_sieve);
  sub("gaps", "One row per consecutive prime pair", run_gaps);

  auto* rst = sub("rst", "R_n, S_n, T_n on a geometric n-grid", run_rst);
  rst->add_option("--seq", o.seq, "Sequence")->check(CLI::IsMember({"primes", "squares"}));
  rst->add_option("--fn", o.fn, "Increasing catalog function");
  rst->add_option("--first-root", o.first_root, "First root of the squares sequence");

  auto* residuals = sub("residuals", "int_{p_n}^{p_{n+1}} dx/f - d_n/f(p_n)", run_residuals);
  residuals->add_option("--fn", o.fn, "Increasing catalog function");
  residuals->add_option("--n-from", o.from, "First n");
  residuals->add_option("--n-to", o.to, "Last n (0 = all)");

  auto* assumptions = sub("assumptions", "Partial sums L1, L2, Lf at checkpoints", run_assumptions);
  assumptions->add_option("--fn", o.fn, "Function for Lf");
  assumptions->add_option("--checkpoints", o.checkpoints, "N values")->delimiter(',');

  auto* theta = sub("theta", "Empty (p_m, (1+theta) p_m] intervals", run_theta);
  theta->add_option("--theta", o.theta, "theta > 0")->required()->check(CLI::PositiveNumber);
  theta->add_option("--m-max", o.m_max, "Largest m (0 = as far as the table allows)");

  auto* stats = sub("stats", "Per-gap statistics with running extrema", run_stats);
  stats->add_option("kind", o.stat_kind, "westzynthius | cramer | merit3")
      ->required()
      ->check(CLI::IsMember({"westzynthius", "cramer", "merit3"}));
  stats->add_option("--n-from", o.from, "First n");
  stats->add_option("--n-to", o.to, "Last n (0 = all)");

  auto* comparison = sub("comparison", "Comparison-test terms a_k, b_k", run_comparison);
  comparison->add_option("--k-from", o.from, "First k");
  comparison->add_option("--k-to", o.to, "Last k (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  omp_set_num_threads(o.common.threads > 0 ? o.common.threads : omp_get_num_procs());

  std::ofstream file;
  std::ostream* dest = &out;
  if (!o.common.out.empty()) {
    file.open(o.common.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "fracgap: cannot open " << o.common.out << " for writing\n";
      return kExitCompute;
    }
    dest = &file;
  }

  const auto fmt = report::parse_format(o.common.format);
  const auto start = std::chrono::steady_clock::now();
  try {
    for (auto& [s, h] : handlers) {
      if (!s->parsed()) continue;
      std::optional<Sink> sink;
      h(o, *dest, fmt, sink);
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
      if (sink) sink->finish(wall.count());
    }
  } catch (const DomainError& e) {
    err << "fracgap: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fracgap: " << e.what() << "\n";
    return kExitCompute;
  }
  dest->flush();
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("fracgap");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fracgap::cli
