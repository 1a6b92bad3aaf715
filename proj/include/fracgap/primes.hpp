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
#include <ranges>
#include <span>
#include <vector>

#include "fracgap/config.hpp"

namespace fracgap {

/// All primes up to `limit`, indexed from 1 (p_1 = 2). Immutable.
class PrimeTable {
 public:
  PrimeTable() = default;

  /// Takes ownership of a sorted prime list. Checks ordering and bounds
  /// (primality is the producer's responsibility).
  PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes);

  std::uint64_t limit() const { return limit_; }
  std::size_t count() const { return primes_.size(); }
  /// p_n, 1-based.
  std::uint64_t prime(std::size_t n) const;
  std::span<const std::uint32_t> primes() const { return primes_; }

  bool operator==(const PrimeTable&) const = default;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

PrimeTable sieve(std::uint64_t limit, const SieveConfig& cfg = {});

/// #{p <= x}. Throws if x exceeds the table limit.
std::size_t pi(const PrimeTable& table, double x);

/// #{p : lo < p <= hi}.
std::size_t count_primes_between(const PrimeTable& table, double lo, double hi);

struct GapRecord {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t p_next = 0;
  std::uint64_t d = 0;
  double merit = 0.0;   // d / log p
  double merit2 = 0.0;  // d / (log p)^2
  double merit3 = 0.0;  // d / (log p)^3
};

GapRecord make_gap_record(std::size_t n, std::uint64_t p, std::uint64_t p_next);

/// Gap n (1 <= n < count), computed on demand.
GapRecord gap_at(const PrimeTable& table, std::size_t n);

void require_gaps(const PrimeTable& table);

/// Lazy view over every consecutive pair, one GapRecord per n. Records are
/// computed as the view is iterated; nothing is materialized. The view
/// refers to `table`, which must outlive it.
inline auto gaps(const PrimeTable& table) {
  require_gaps(table);
  return std::views::iota(std::size_t{1}, table.count()) |
         std::views::transform([&table](std::size_t n) { return gap_at(table, n); });
}

}  // namespace fracgap
