// Copyright 2026 The hdtile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace hdtile {

// SplitMix64 (Steele, Lea & Flood 2014; constants as in Vigna's public
// reference implementation). Portable and bit-reproducible across languages.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// High 64 bits of a 64x64-bit product.
constexpr std::uint64_t mul_high(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t a_lo = a & 0xFFFFFFFFu, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFu, b_hi = b >> 32;
  const std::uint64_t lo_lo = a_lo * b_lo;
  const std::uint64_t hi_lo = a_hi * b_lo;
  const std::uint64_t lo_hi = a_lo * b_hi;
  const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xFFFFFFFFu) + lo_hi;
  return a_hi * b_hi + (hi_lo >> 32) + (cross >> 32);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kSplitMixGamma;
    return splitmix64_mix(state_);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Integer in [0, n) via the high word of a 64x64 multiply. n >= 1.
  std::uint64_t next_below(std::uint64_t n) noexcept {
    return mul_high(next(), n);
  }

 private:
  std::uint64_t state_;
};

// Chained SplitMix64 hash over 64-bit little-endian words (the final partial
// word zero-filled): h <- mix((h ^ word) + gamma). Each step is a bijection of
// h, so two inputs of equal length that differ in any byte hash to different
// 64-bit values.
constexpr std::uint64_t hash_bytes(std::uint64_t h, std::span<const std::uint8_t> bytes) noexcept {
  std::size_t i = 0;
  while (i < bytes.size()) {
    std::uint64_t word = 0;
    for (std::size_t k = 0; k < 8 && i < bytes.size(); ++k, ++i) {
      word |= static_cast<std::uint64_t>(bytes[i]) << (8 * k);
    }
    h = splitmix64_mix((h ^ word) + kSplitMixGamma);
  }
  return h;
}

}  // namespace hdtile
