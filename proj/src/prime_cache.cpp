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

#include "fracgap/prime_cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <iterator>

#include "fracgap/errors.hpp"

namespace fracgap {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'F', 'R', 'G', 'P'};

template <class UInt>
void put_le(std::vector<std::uint8_t>& out, UInt v) {
  for (std::size_t i = 0; i < sizeof(UInt); ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <class UInt>
  UInt le() {
    if (bytes_.size() - pos_ < sizeof(UInt)) throw CacheFormatError("prime cache truncated");
    UInt v = 0;
    for (std::size_t i = 0; i < sizeof(UInt); ++i) {
      v |= static_cast<UInt>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += sizeof(UInt);
    return v;
  }

  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      if (pos_ >= bytes_.size()) throw CacheFormatError("prime cache truncated in varint");
      const std::uint8_t b = bytes_[pos_++];
      v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
    }
    throw CacheFormatError("prime cache varint too long");
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode_prime_cache(const PrimeTable& table) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  put_le<std::uint32_t>(out, kPrimeCacheVersion);
  put_le<std::uint64_t>(out, table.limit());
  put_le<std::uint64_t>(out, table.count());
  std::uint64_t prev = 0;
  for (std::uint32_t p : table.primes()) {
    put_varint(out, p - prev);
    prev = p;
  }
  return out;
}

PrimeTable decode_prime_cache(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() ||
      std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw CacheFormatError("not a prime cache (bad magic)");
  }
  Reader in(bytes.subspan(kMagic.size()));
  const auto version = in.le<std::uint32_t>();
  if (version != kPrimeCacheVersion) throw CacheFormatError("unsupported prime cache version");
  const auto limit = in.le<std::uint64_t>();
  const auto count = in.le<std::uint64_t>();
  if (count > bytes.size()) throw CacheFormatError("prime cache count exceeds payload");

  std::vector<std::uint32_t> primes;
  primes.reserve(static_cast<std::size_t>(count));
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t delta = in.varint();
    if (delta == 0) throw CacheFormatError("prime cache has a zero delta");
    prev += delta;
    if (prev > limit || prev > 0xFFFFFFFFull) throw CacheFormatError("prime exceeds cache limit");
    primes.push_back(static_cast<std::uint32_t>(prev));
  }
  if (!in.done()) throw CacheFormatError("trailing bytes after prime cache payload");
  try {
    return PrimeTable(limit, std::move(primes));
  } catch (const DomainError& e) {
    throw CacheFormatError(std::string("invalid prime cache: ") + e.what());
  }
}

void write_prime_cache(const std::filesystem::path& path, const PrimeTable& table) {
  const auto bytes = encode_prime_cache(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

PrimeTable read_prime_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_prime_cache(bytes);
}

}  // namespace fracgap
