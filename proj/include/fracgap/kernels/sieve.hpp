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
#include <vector>

namespace fracgap::kernels {

/// All primes <= limit from an odd-only segmented bitset sieve, segments
/// distributed over OpenMP threads. Output is independent of segment size
/// and thread count.
std::vector<std::uint32_t> sieve_segmented(std::uint64_t limit, std::size_t segment_bytes);

/// Plain (unsegmented, byte-per-integer) sieve of Eratosthenes. Serial
/// reference for the segmented kernel.
std::vector<std::uint32_t> sieve_reference(std::uint64_t limit);

}  // namespace fracgap::kernels
