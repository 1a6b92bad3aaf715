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
#include <filesystem>
#include <span>
#include <vector>

#include "fracgap/primes.hpp"

namespace fracgap {

// Binary prime-table cache, little-endian:
//   "FRGP" | version u32 | limit u64 | count u64 | count x varint(delta)
// delta_1 = p_1 - 0, delta_i = p_i - p_{i-1}; varints are unsigned LEB128.
inline constexpr std::uint32_t kPrimeCacheVersion = 1;

std::vector<std::uint8_t> encode_prime_cache(const PrimeTable& table);
PrimeTable decode_prime_cache(std::span<const std::uint8_t> bytes);

void write_prime_cache(const std::filesystem::path& path, const PrimeTable& table);
PrimeTable read_prime_cache(const std::filesystem::path& path);

}  // namespace fracgap
