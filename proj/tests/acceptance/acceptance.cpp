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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 255).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fracgap/cli.hpp"
#include "fracgap/compensated_sum.hpp"
#include "fracgap/fracint.hpp"
#include "fracgap/funcspec.hpp"
#include "fracgap/gapseq.hpp"
#include "fracgap/kernels/parallel_sum.hpp"
#include "fracgap/kernels/sieve.hpp"
#include "fracgap/primes.hpp"
#include "fracgap/specialfn.hpp"
#include "oracles.hpp"

namespace fg = fracgap;

namespace {

// Pinned tolerances.
constexpr double kQuadTol = 1e-10;
constexpr double kExactVsQuadRel = 1e-8;
constexpr double kZetaIdentityRel = 1e-10;
constexpr double kZetaSeriesAbs = 1e-5;
constexpr double kGammaClosedFormRel = 1e-10;
constexpr double kGammaOracleAbs = 1e-4;
constexpr double kL1ThreeTerms = 0.547619;
constexpr double kL1ThreeTermsAbs = 1e-6;

constexpr std::uint64_t kLimit = 10'000'000;
constexpr std::uint64_t kAuditLimit = 16'000'000;
constexpr std::uint64_t kSandwichLimit = 1'000'000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const fg::PrimeTable& big_table() {
  static const fg::PrimeTable t = fg::sieve(kAuditLimit);
  return t;
}

std::size_t count_below(const fg::PrimeTable& t, double x) {
  return fg::pi(t, std::nextafter(x, 0.0));
}

void c1_exact_vs_quadrature(Outcome& o) {
  const std::vector<std::pair<double, double>> grid = {
      {2.0, 3.0},   {2.0, 10.0},  {2.5, 7.25},   {3.0, 4.0},    {4.0, 9.0},     {5.5, 100.0},
      {10.0, 11.5}, {17.0, 64.0}, {20.0, 500.0}, {99.5, 101.5}, {123.0, 987.0}, {400.0, 2500.0}};
  std::size_t cases = 0, bad = 0;
  double worst = 0.0;
  for (const fg::FuncSpec& f : fg::builtin_catalog()) {
    for (auto [a, b] : grid) {
      const double exact = fg::integrate_frac_exact(f, a, b);
      const double quad = fg::integrate_frac_quadrature(f, a, b, kQuadTol);
      const double scaled = std::fabs(exact - quad) / (1.0 + std::fabs(exact));
      worst = std::max(worst, scaled);
      ++cases;
      if (scaled > kExactVsQuadRel) {
        ++bad;
        o.detail << " " << f.name << "[" << a << "," << b << "]";
      }
    }
  }
  o.detail << cases << " cases, worst scaled diff " << worst;
  o.require(bad == 0, std::to_string(bad) + " cases over tolerance");
}

void c2_zeta(Outcome& o) {
  double worst = 0.0;
  for (int n : {2, 3, 4}) {
    for (std::uint64_t c = 2; c <= 50; ++c) {
      const double cd = static_cast<double>(c);
      const double expected = std::pow(cd, 1 - n) / (n - 1) + fg::zeta_series(n, c);
      const double got = fg::zeta_via_fracint(n, c).value;
      worst = std::max(worst, std::fabs(got - expected) / std::fabs(expected));
    }
  }
  const double diff =
      std::fabs(fg::zeta_via_fracint(2, 1000).value - fg::zeta_series(2, 10'000'000));
  o.detail << "identity worst rel " << worst << ", |zeta(2;1000) - series(1e7)| = " << diff;
  o.require(worst <= kZetaIdentityRel, "identity");
  o.require(diff <= kZetaSeriesAbs, "series agreement");
}

void c3_gamma(Outcome& o) {
  double worst = 0.0;
  for (std::uint64_t a : {2ull, 10ull, 100ull, 1000ull, 10'000ull}) {
    const double ad = static_cast<double>(a);
    const double expected = std::log(ad) - fg::harmonic(a) + 1.0;
    worst = std::max(worst,
                     std::fabs(fg::gamma_via_fracint(a).value - expected) / std::fabs(expected));
  }
  const double gamma_oracle = fg::harmonic(100'000'000) - std::log(1e8);
  const double diff = std::fabs(fg::gamma_via_fracint(10'000).value - (1.0 - gamma_oracle));
  o.detail << "closed form worst rel " << worst << ", oracle gamma " << gamma_oracle
           << ", |est - (1 - gamma)| = " << diff;
  o.require(worst <= kGammaClosedFormRel, "closed form");
  o.require(diff <= kGammaOracleAbs, "gamma oracle");
}

void c4_sieve(Outcome& o) {
  const fg::PrimeTable t6 = fg::sieve(1'000'000);
  const auto trial = fg::testing::primes_by_trial_division(1'000'000);
  const bool eq6 = std::equal(t6.primes().begin(), t6.primes().end(), trial.begin(),
                              trial.end());
  const fg::PrimeTable t7 = fg::sieve(kLimit);
  const auto ref7 = fg::kernels::sieve_reference(kLimit);
  const bool eq7 = std::equal(t7.primes().begin(), t7.primes().end(), ref7.begin(), ref7.end());

  std::size_t bertrand_bad = 0;
  std::uint64_t total = 0;
  for (const fg::GapRecord& g : fg::gaps(t7)) {
    if (g.d > g.p) ++bertrand_bad;
    total += g.d;
  }
  o.detail << "pi(1e6) = " << t6.count() << ", pi(1e7) = " << t7.count();
  o.require(eq6 && t6.count() == trial.size(), "1e6 vs trial division");
  o.require(eq7 && t7.count() == ref7.size(), "1e7 vs reference sieve");
  o.require(bertrand_bad == 0, "d_n <= p_n");
  o.require(total == t7.prime(t7.count()) - 2, "telescoping");
}

void c5_sandwich(Outcome& o) {
  const fg::PrimeTable table = fg::sieve(kSandwichLimit);
  const auto primes = fg::SeqSource::primes(table);
  const auto squares = fg::SeqSource::squares(999);
  std::size_t instances = 0, provable_bad = 0, r_le_t = 0;
  bool n3_violation = false;
  for (const fg::SeqSource* seq : {&primes, &squares}) {
    for (const fg::FuncSpec& f : {fg::identity_fn(), fg::log_power_fn(1), fg::sqrt_fn()}) {
      for (std::size_t n : fg::geometric_grid(seq->size(), 2.0)) {
        const auto ts = fg::compute_RST(*seq, f, n);
        const auto chk = fg::check_sandwich(ts);
        ++instances;
        if (!(chk.s_le_r && chk.r_lt_t_plus_bound)) ++provable_bad;
        if (chk.r_le_t) ++r_le_t;
        if (seq == &primes && f.name == "identity" && n == 3 && !chk.r_le_t) n3_violation = true;
      }
    }
  }
  o.detail << instances << " instances, R<=T frequency "
           << static_cast<double>(r_le_t) / static_cast<double>(instances) << " (" << r_le_t
           << "/" << instances << ")";
  o.require(provable_bad == 0, std::to_string(provable_bad) + " provable failures");
  o.require(n3_violation, "R_3 > T_3 for primes/identity not reproduced");
}

void c6_residual(Outcome& o) {
  const auto& table = big_table();
  const auto seq = fg::SeqSource::primes(table);
  const std::size_t n_last = count_below(table, static_cast<double>(kLimit));
  std::size_t quad_bad = 0, total = 0, bound_bad = 0;
  for (const fg::FuncSpec& f : {fg::identity_fn(), fg::log_power_fn(1)}) {
    const bool ident = f.name == "identity";
    const auto s = fg::residual_sweep(seq, f, 1, n_last, [&](const fg::ResidualSample& r) {
      if (!ident) return;
      const double q = static_cast<double>(r.d) / static_cast<double>(r.a_n);
      if (std::fabs(r.residual) > q * q / 2) ++quad_bad;
    });
    total += s.count;
    bound_bad += s.bound_violations;
  }
  o.detail << total << " residuals, " << bound_bad << " bound violations, " << quad_bad
           << " quadratic-bound violations";
  o.require(bound_bad == 0, "residual interval");
  o.require(quad_bad == 0, "quadratic bound");
}

void c7_assumptions(Outcome& o) {
  const auto& table = big_table();
  const auto audit = fg::assumption_audit(table, fg::log_power_fn(1), {10'000, 100'000, 1'000'000});
  bool monotone = true;
  for (std::size_t i = 1; i < audit.size(); ++i) {
    monotone = monotone && audit[i].sums.L1 >= audit[i - 1].sums.L1 &&
               audit[i].sums.L2 >= audit[i - 1].sums.L2;
  }
  const double l1_3 = fg::assumption_partial_sums(table, fg::identity_fn(), 3).L1;
  for (const auto& cp : audit) {
    o.detail << "N=" << cp.sums.N << " L1=" << cp.sums.L1 << " L2=" << cp.sums.L2 << "; ";
  }
  o.detail << "L1(3)=" << l1_3;
  o.require(audit.size() == 3 && monotone, "nondecreasing");
  o.require(std::fabs(l1_3 - kL1ThreeTerms) <= kL1ThreeTermsAbs, "first three terms");
}

void c8_comparison(Outcome& o) {
  const auto& table = big_table();
  const std::size_t k_last = count_below(table, static_cast<double>(kLimit)) - 1;
  std::size_t bad = 0;
  for (const auto& c : fg::comparison_scan(table, 4, k_last)) {
    if (!(c.b < c.a)) ++bad;
  }
  const auto k2 = fg::comparison_terms(table, 2);
  o.detail << "k in [4, " << k_last << "], " << bad << " failures; k=2: a=" << k2.a
           << " b=" << k2.b;
  o.require(bad == 0, "b_k < a_k");
  o.require(!(k2.b < k2.a), "k=2 failure");
}

// Largest prime p < bound with no prime in (p, (1+theta)p], by trial division.
std::uint64_t brute_theta(double theta, std::uint64_t bound, std::size_t& violations) {
  std::uint64_t largest = 0;
  violations = 0;
  for (std::uint64_t p = 2; p < bound; ++p) {
    if (!fg::testing::is_prime_trial(p)) continue;
    const double hi = (1.0 + theta) * static_cast<double>(p);
    bool found = false;
    for (std::uint64_t q = p + 1; static_cast<double>(q) <= hi; ++q) {
      if (fg::testing::is_prime_trial(q)) {
        found = true;
        break;
      }
    }
    if (!found) {
      ++violations;
      largest = p;
    }
  }
  return largest;
}

void c9_theta(Outcome& o) {
  const auto& table = big_table();
  const std::size_t m_max = count_below(table, 1e6);
  const auto one = fg::theta_interval_scan(table, 1.0, m_max);
  const auto fifth = fg::theta_interval_scan(table, 0.2, m_max);
  std::size_t brute_violations = 0;
  const std::uint64_t brute = brute_theta(0.2, 1'000'000, brute_violations);
  o.detail << "theta=1: " << one.violations.size() << " violations; theta=0.2: largest "
           << fifth.largest_violating_p << " (brute force " << brute << ", "
           << brute_violations << " violations)";
  o.require(one.violations.empty(), "theta=1");
  o.require(fifth.largest_violating_p == 23 && brute == 23, "theta=0.2 largest violator");
  o.require(fifth.violations.size() == brute_violations, "scan vs brute force count");
}

void c10_cramer(Outcome& o) {
  const auto& table = big_table();
  const std::size_t n_first = fg::pi(table, 11.0);
  const std::size_t n_last = count_below(table, static_cast<double>(kLimit));
  const auto all = fg::stat_sweep_stream(table, n_first, n_last, fg::StatKind::cramer, 11.0, {});
  auto window = [&](double lo, double hi) {
    return fg::stat_sweep_stream(table, fg::pi(table, std::nextafter(lo, 0.0)) + 1,
                                 count_below(table, hi), fg::StatKind::cramer, lo, {})
        .max_difference;
  };
  const double late = window(1e6, 1e7);
  const double early = window(1e3, 1e4);
  o.detail << "sup merit2 " << all.sup_value << " at p=" << all.argsup_value_p << ", sup C "
           << all.sup_comparand << ", max|C-merit2| [1e3,1e4) " << early << ", [1e6,1e7) "
           << late;
  o.require(all.sup_value <= 1.0, "sup merit2");
  o.require(all.sup_comparand <= 1.0, "sup C_n");
  o.require(late <= early, "shrinking difference");
}

void c11_determinism(Outcome& o) {
  const auto dir = std::filesystem::temp_directory_path() / "fracgap_acceptance";
  std::filesystem::create_directories(dir);
  auto cache = [&](std::uint64_t limit) {
    return (dir / ("primes_" + std::to_string(limit) + ".bin")).string();
  };
  const std::string l7 = std::to_string(kLimit);
  const std::string l6 = std::to_string(kSandwichLimit);
  const std::string la = std::to_string(kAuditLimit);
  const std::vector<std::vector<std::string>> cmds = {
      {"sieve", "--limit", l7, "--cache", cache(kLimit)},
      {"gaps", "--limit", l7, "--cache", cache(kLimit)},
      {"rst", "--seq", "primes", "--fn", "identity", "--limit", l6, "--cache", cache(kSandwichLimit)},
      {"rst", "--seq", "primes", "--fn", "log", "--limit", l6, "--cache", cache(kSandwichLimit)},
      {"rst", "--seq", "squares", "--fn", "sqrt", "--limit", l6},
      {"residuals", "--fn", "identity", "--limit", l7, "--cache", cache(kLimit)},
      {"residuals", "--fn", "log", "--limit", l7, "--cache", cache(kLimit)},
      {"assumptions", "--fn", "log", "--checkpoints", "10000,100000,1000000", "--limit", la,
       "--cache", cache(kAuditLimit)},
      {"comparison", "--limit", l7, "--cache", cache(kLimit)},
      {"theta", "--theta", "1", "--limit", l7, "--cache", cache(kLimit)},
      {"theta", "--theta", "0.2", "--limit", l7, "--cache", cache(kLimit)},
      {"stats", "cramer", "--limit", l7, "--cache", cache(kLimit)},
      {"stats", "westzynthius", "--limit", l7, "--cache", cache(kLimit)},
  };
  std::size_t bytes = 0, mismatched = 0;
  for (const auto& cmd : cmds) {
    std::string outputs[2];
    int codes[2];
    const char* threads[2] = {"1", "8"};
    for (int i = 0; i < 2; ++i) {
      auto args = cmd;
      args.insert(args.end(), {"--threads", threads[i]});
      std::ostringstream out, err;
      codes[i] = fg::cli::run(args, out, err);
      outputs[i] = out.str();
    }
    bytes += outputs[0].size();
    if (codes[0] != 0 || codes[1] != 0 || outputs[0] != outputs[1] || outputs[0].empty()) {
      ++mismatched;
      o.detail << " mismatch: " << cmd[0];
    }
  }
  std::filesystem::remove_all(dir);
  o.detail << cmds.size() << " reports, " << bytes << " bytes each side";
  o.require(mismatched == 0, std::to_string(mismatched) + " reports differ");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "exact fractional-part integral matches quadrature", c1_exact_vs_quadrature},
      {2, "zeta identity and series agreement", c2_zeta},
      {3, "gamma closed form and oracle", c3_gamma},
      {4, "sieve counts, Bertrand bound, telescoping", c4_sieve},
      {5, "R/S/T sandwich", c5_sandwich},
      {6, "residual bounds", c6_residual},
      {7, "assumption partial sums", c7_assumptions},
      {8, "comparison terms", c8_comparison},
      {9, "theta intervals", c9_theta},
      {10, "Cramer statistic", c10_cramer},
      {11, "thread-count determinism", c11_determinism},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.str().c_str(), wall.count());
    std::fflush(stdout);
  }
  return std::min(failed, 255);
}
