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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include <omp.h>

#include "fracgap/kernels/sieve.hpp"

namespace fracgap::kernels {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sieves the odd numbers in (low, high] (low even) and appends survivors.
void sieve_segment(std::uint64_t low, std::uint64_t high,
                   const std::vector<std::uint32_t>& base,
                   std::vector<std::uint64_t>& bits,
                   std::vector<std::uint32_t>& out) {
  // bit j <-> low + 2j + 1
  const std::uint64_t count = (high - low + 1) / 2;
  const std::size_t words = static_cast<std::size_t>((count + 63) / 64);
  std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(words), 0);

  for (std::uint32_t q32 : base) {
    const std::uint64_t q = q32;
    if (q == 2) continue;
    if (q * q > high) break;
    std::uint64_t start = ((low + 1 + q - 1) / q) * q;
    if (start % 2 == 0) start += q;
    start = std::max(start, q * q);
    for (std::uint64_t j = (start - low - 1) / 2; j < count; j += q) {
      bits[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }

  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t free_bits = ~bits[w];
    if (w + 1 == words && count % 64 != 0) free_bits &= (std::uint64_t{1} << (count % 64)) - 1;
    while (free_bits) {
      const int b = std::countr_zero(free_bits);
      free_bits &= free_bits - 1;
      const std::uint64_t n = low + 2 * (64 * w + static_cast<std::uint64_t>(b)) + 1;
      if (n >= 3) out.push_back(static_cast<std::uint32_t>(n));
    }
  }
}

}  // namespace

std::vector<std::uint32_t> sieve_segmented(std::uint64_t limit, std::size_t segment_bytes) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;

  const std::vector<std::uint32_t> base = sieve_reference(isqrt(limit));

  // Each segment covers 16 * segment_bytes integers (8 odd numbers per byte).
  const std::uint64_t span = 16 * std::max<std::uint64_t>(segment_bytes, 8);
  const std::int64_t segments = static_cast<std::int64_t>((limit + span - 1) / span);
  std::vector<std::vector<std::uint32_t>> found(static_cast<std::size_t>(segments));

#pragma omp parallel
  {
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(span / 128 + 1));
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < segments; ++s) {
      const std::uint64_t low = static_cast<std::uint64_t>(s) * span;
      const std::uint64_t high = std::min(low + span, limit);
      sieve_segment(low, high, base, bits, found[static_cast<std::size_t>(s)]);
    }
  }

  std::size_t total = 1;
  for (const auto& f : found) total += f.size();
  primes.reserve(total);
  primes.push_back(2);
  for (const auto& f : found) primes.insert(primes.end(), f.begin(), f.end());
  return primes;
}

}  // namespace fracgap::kernels
