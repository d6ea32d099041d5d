// Copyright 2026 The crossdep Authors.
// SPDX-License-Identifier: Apache-2.0

// Seeded, splittable random streams.
//
// Every draw comes from a Xoshiro256** generator whose 256-bit state is
// filled by SplitMix64, started from a key that mixes (seed, stream_id,
// substream key...). A given key always yields the same sequence, so work
// split across threads reproduces a sequential run exactly as long as each
// unit of work (e.g. one length group in one replica) uses its own key.
//
// Bounded integers use Lemire's multiply-and-reject method and shuffles are
// a plain Fisher-Yates, so sequences do not depend on the standard library
// implementation.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace crossdep {

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform integer in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  template <class T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Root of a family of independent streams.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// A child source: same seed, derived stream id.
  RandomSource child(std::uint64_t key) const;

  /// Generator for the substream identified by (a, b).
  Xoshiro256 substream(std::uint64_t a, std::uint64_t b = 0) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

/// The SplitMix64 output function applied to `x`.
std::uint64_t mix64(std::uint64_t x);

}  // namespace crossdep
