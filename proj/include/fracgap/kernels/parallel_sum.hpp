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

#include <cstdint>
#include <vector>

#include <omp.h>

#include "fracgap/compensated_sum.hpp"

namespace fracgap::kernels {

// Chunk boundaries are fixed by the index range alone, so the result does not
// depend on how many threads run the loop.
inline constexpr std::int64_t kSumChunk = 1 << 15;

/// Compensated sum of term(i) for i in [first, last), OpenMP-parallel over
/// fixed chunks, merged in chunk order. `term` must not throw.
template <class Term>
CompensatedSum parallel_sum(std::int64_t first, std::int64_t last, const Term& term) {
  if (last <= first) return {};
  const std::int64_t n = last - first;
  const std::int64_t chunks = (n + kSumChunk - 1) / kSumChunk;
  std::vector<CompensatedSum> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1) if (chunks > 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t lo = first + c * kSumChunk;
    const std::int64_t hi = (lo + kSumChunk < last) ? lo + kSumChunk : last;
    CompensatedSum acc;
    for (std::int64_t i = lo; i < hi; ++i) acc.add(term(i));
    partial[static_cast<std::size_t>(c)] = acc;
  }

  CompensatedSum total;
  for (const auto& p : partial) total.add(p);
  return total;
}

/// Serial reference: one compensated pass in index order.
template <class Term>
CompensatedSum serial_sum(std::int64_t first, std::int64_t last, const Term& term) {
  CompensatedSum acc;
  for (std::int64_t i = first; i < last; ++i) acc.add(term(i));
  return acc;
}

}  // namespace fracgap::kernels
