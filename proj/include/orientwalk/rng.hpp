// Copyright 2026 The orientwalk Authors.
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

// Counter-based random numbers.
//
// Every random quantity in the library is a pure function of a 64-bit seed,
// a stream id (usually the trial index) and a position inside the stream.
// There is no mutable generator shared between trials, so any schedule of
// trials over threads produces identical numbers.

#pragma once

#include <array>
#include <cstdint>

namespace orientwalk {

__extension__ typedef unsigned __int128 Uint128;

/// Philox4x32-10 block function (Salmon et al., SC'11, "Random123").
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter Apply(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kW0;
        key[1] += kW1;
      }
      const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;
};

/// SplitMix64 finalizer; used to derive keys, never as a stream generator.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Separates the key spaces of independent random consumers sharing a seed.
enum class Domain : std::uint64_t {
  kMoves = 1,
  kEnvironment = 2,
  kSkeleton = 3,
  kRademacher = 4,
  kPermutation = 5,
  kTestData = 6,
};

constexpr std::uint64_t DeriveKey(std::uint64_t seed, Domain domain) {
  return Mix64(seed ^ Mix64(static_cast<std::uint64_t>(domain)));
}

/// Random-access 64-bit words: word `index` of stream `stream` under `key`.
class CounterStream {
 public:
  constexpr CounterStream(std::uint64_t key, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(key),
             static_cast<std::uint32_t>(key >> 32)},
        stream_(stream) {}

  /// Two 64-bit words from block `block`.
  constexpr std::array<std::uint64_t, 2> Block(std::uint64_t block) const {
    const Philox4x32::Counter out = Philox4x32::Apply(
        {static_cast<std::uint32_t>(block),
         static_cast<std::uint32_t>(block >> 32),
         static_cast<std::uint32_t>(stream_),
         static_cast<std::uint32_t>(stream_ >> 32)},
        key_);
    return {(std::uint64_t{out[1]} << 32) | out[0],
            (std::uint64_t{out[3]} << 32) | out[2]};
  }

  constexpr std::uint64_t Word(std::uint64_t index) const {
    return Block(index >> 1)[index & 1];
  }

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_;
};

/// Sequential reader over a CounterStream.
class WordReader {
 public:
  constexpr explicit WordReader(CounterStream stream) : stream_(stream) {}

  std::uint64_t Next() {
    if ((next_ & 1) == 0) buffer_ = stream_.Block(next_ >> 1);
    return buffer_[next_++ & 1];
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double NextUniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's rejection method).
  std::uint64_t NextBelow(std::uint64_t bound) {
    Uint128 m = static_cast<Uint128>(Next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<Uint128>(Next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Next random bit, consuming words 64 bits at a time.
  bool NextBit() {
    if (bits_left_ == 0) {
      bits_ = Next();
      bits_left_ = 64;
    }
    const bool bit = bits_ & 1;
    bits_ >>= 1;
    --bits_left_;
    return bit;
  }

 private:
  CounterStream stream_;
  std::uint64_t next_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  std::uint64_t bits_ = 0;
  int bits_left_ = 0;
};

/// Uniform draws from {0, 1, 2}, one per chain step.
///
/// Step i reads base-3 digit (i % 20) of word (i / 20) interpreted as a
/// fraction in [0, 1). 3^20 divides 2^64 up to a relative error of 2e-10,
/// so each block of 20 digits is uniform to that accuracy.
class TritStream {
 public:
  static constexpr int kTritsPerWord = 20;

  constexpr TritStream(std::uint64_t seed, std::uint64_t stream)
      : stream_(DeriveKey(seed, Domain::kMoves), stream) {}

  /// Random access; agrees with the sequential reader.
  int At(std::uint64_t step) const {
    std::uint64_t word = stream_.Word(step / kTritsPerWord);
    int digit = 0;
    for (std::uint64_t i = 0; i <= step % kTritsPerWord; ++i) {
      const Uint128 m = static_cast<Uint128>(word) * 3u;
      digit = static_cast<int>(m >> 64);
      word = static_cast<std::uint64_t>(m);
    }
    return digit;
  }

  int Next() {
    if (left_ == 0) {
      if ((word_index_ & 1) == 0) buffer_ = stream_.Block(word_index_ >> 1);
      word_ = buffer_[word_index_ & 1];
      ++word_index_;
      left_ = kTritsPerWord;
    }
    const Uint128 m = static_cast<Uint128>(word_) * 3u;
    word_ = static_cast<std::uint64_t>(m);
    --left_;
    return static_cast<int>(m >> 64);
  }

 private:
  CounterStream stream_;
  std::array<std::uint64_t, 2> buffer_{};
  std::uint64_t word_ = 0;
  std::uint64_t word_index_ = 0;
  int left_ = 0;
};

}  // namespace orientwalk
