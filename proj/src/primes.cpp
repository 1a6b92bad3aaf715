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

#include "fracgap/primes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracgap/errors.hpp"
#include "fracgap/kernels/sieve.hpp"

namespace fracgap {

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
    : limit_(limit), primes_(std::move(primes)) {
  for (std::size_t i = 1; i < primes_.size(); ++i) {
    if (primes_[i] <= primes_[i - 1]) throw DomainError("prime list is not strictly increasing");
  }
  if (!primes_.empty() && (primes_.front() < 2 || primes_.back() > limit_)) {
    throw DomainError("prime list out of range for its limit");
  }
}

std::uint64_t PrimeTable::prime(std::size_t n) const {
  if (n == 0 || n > primes_.size()) {
    std::ostringstream msg;
    msg << "prime index " << n << " out of range [1, " << primes_.size() << "]";
    throw DomainError(msg.str());
  }
  return primes_[n - 1];
}

PrimeTable sieve(std::uint64_t limit, const SieveConfig& cfg) {
  if (limit < 2) throw DomainError("sieve: limit must be >= 2");
  if (limit > cfg.max_limit || limit > 0xFFFFFFFFull) {
    std::ostringstream msg;
    msg << "sieve: limit " << limit << " exceeds configured max " << cfg.max_limit;
    throw ResourceError(msg.str());
  }
  // pi(x) < 1.25506 x / log x for x > 1.
  const double x = static_cast<double>(limit);
  const double est_count = x < 17 ? 8.0 : 1.25506 * x / std::log(x);
  const double est_bytes = est_count * sizeof(std::uint32_t) + 2.0 * std::sqrt(x) +
                           static_cast<double>(cfg.segment_bytes);
  if (est_bytes > static_cast<double>(cfg.memory_budget_bytes)) {
    std::ostringstream msg;
    msg << "sieve: estimated " << est_bytes << " bytes exceeds memory budget "
        << cfg.memory_budget_bytes;
    throw ResourceError(msg.str());
  }
  return PrimeTable(limit, kernels::sieve_segmented(limit, cfg.segment_bytes));
}

namespace {

void check_upper(const PrimeTable& table, double x) {
  if (!(x <= static_cast<double>(table.limit()))) {
    std::ostringstream msg;
    msg << "x = " << x << " exceeds table limit " << table.limit();
    throw DomainError(msg.str());
  }
}

std::size_t count_le(const PrimeTable& table, double x) {
  if (x < 2.0) return 0;
  const auto v = static_cast<std::uint64_t>(std::floor(x));
  const auto ps = table.primes();
  return static_cast<std::size_t>(std::upper_bound(ps.begin(), ps.end(), v) - ps.begin());
}

}  // namespace

std::size_t pi(const PrimeTable& table, double x) {
  check_upper(table, x);
  return count_le(table, x);
}

std::size_t count_primes_between(const PrimeTable& table, double lo, double hi) {
  if (!(lo <= hi)) throw DomainError("count_primes_between: requires lo <= hi");
  check_upper(table, hi);
  return count_le(table, hi) - count_le(table, lo);
}

GapRecord make_gap_record(std::size_t n, std::uint64_t p, std::uint64_t p_next) {
  GapRecord r;
  r.n = n;
  r.p = p;
  r.p_next = p_next;
  r.d = p_next - p;
  const double l = std::log(static_cast<double>(p));
  const double d = static_cast<double>(r.d);
  r.merit = d / l;
  r.merit2 = d / (l * l);
  r.merit3 = d / (l * l * l);
  return r;
}

void require_gaps(const PrimeTable& table) {
  if (table.count() < 2) throw DomainError("gap extraction needs at least two primes");
}

GapRecord gap_at(const PrimeTable& table, std::size_t n) {
  if (n == 0 || n + 1 > table.count()) {
    std::ostringstream msg;
    msg << "gap index " << n << " out of range [1, " << table.count() - 1 << "]";
    throw DomainError(msg.str());
  }
  return make_gap_record(n, table.prime(n), table.prime(n + 1));
}

}  // namespace fracgap
