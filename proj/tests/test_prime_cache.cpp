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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

#include <gtest/gtest.h>

#include "fracgap/errors.hpp"
#include "fracgap/prime_cache.hpp"
#include "fracgap/primes.hpp"

namespace fracgap {
namespace {

TEST(PrimeCache, ExactBytesForSmallTable) {
  const auto bytes = encode_prime_cache(sieve(10));
  const std::vector<std::uint8_t> expected = {
      'F', 'R', 'G', 'P',      // magic
      1,   0,   0,   0,        // version
      10,  0,   0,   0, 0, 0, 0, 0,  // limit
      4,   0,   0,   0, 0, 0, 0, 0,  // count
      2,   1,   2,   2,        // deltas
  };
  EXPECT_EQ(bytes, expected);
}

TEST(PrimeCache, RoundTrip) {
  for (std::uint64_t limit : {2ull, 10ull, 1000ull, 2'000'000ull}) {
    const PrimeTable t = sieve(limit);
    EXPECT_EQ(decode_prime_cache(encode_prime_cache(t)), t) << limit;
  }
  const PrimeTable empty(1, {});
  EXPECT_EQ(decode_prime_cache(encode_prime_cache(empty)), empty);
}

TEST(PrimeCache, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "fracgap_test_cache.bin";
  const PrimeTable t = sieve(100'000);
  write_prime_cache(path, t);
  EXPECT_EQ(read_prime_cache(path), t);
  std::filesystem::remove(path);
  EXPECT_THROW(read_prime_cache(path), std::runtime_error);
}

TEST(PrimeCache, RejectsCorruptInput) {
  const auto good = encode_prime_cache(sieve(100));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(decode_prime_cache(bad_magic), CacheFormatError);

  auto bad_version = good;
  bad_version[4] = 2;
  EXPECT_THROW(decode_prime_cache(bad_version), CacheFormatError);

  auto truncated = good;
  truncated.pop_back();
  EXPECT_THROW(decode_prime_cache(truncated), CacheFormatError);

  auto trailing = good;
  trailing.push_back(1);
  EXPECT_THROW(decode_prime_cache(trailing), CacheFormatError);

  auto zero_delta = good;
  zero_delta[24] = 0;
  EXPECT_THROW(decode_prime_cache(zero_delta), CacheFormatError);

  auto low_limit = good;
  low_limit[8] = 50;
  EXPECT_THROW(decode_prime_cache(low_limit), CacheFormatError);

  EXPECT_THROW(decode_prime_cache(std::vector<std::uint8_t>{}), CacheFormatError);
  EXPECT_THROW(decode_prime_cache(std::vector<std::uint8_t>(good.begin(), good.begin() + 10)),
               CacheFormatError);
}

}  // namespace
}  // namespace fracgap
