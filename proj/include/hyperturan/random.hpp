// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace hyperturan {

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so results never depend on iteration order or
/// thread scheduling. The mixer is SplitMix64's finalizer.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix(seed ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL))) {}

  [[nodiscard]] constexpr std::uint64_t at(std::uint64_t counter) const noexcept {
    return mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform integer in [0, bound) by multiply-high (bias < bound / 2^64).
  [[nodiscard]] constexpr std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(at(counter)) * bound) >> 64);
  }

  /// Exact Bernoulli(num/den) test: u < num/den * 2^64 with u uniform on 64 bits.
  [[nodiscard]] constexpr bool bernoulli(std::uint64_t counter, std::uint64_t num, std::uint64_t den) const noexcept {
    if (num >= den) return true;
    const unsigned __int128 lhs = static_cast<unsigned __int128>(at(counter)) * den;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(num) << 64;
    return lhs < rhs;
  }

  /// Derives an independent generator, e.g. one per base copy or sweep cell.
  [[nodiscard]] constexpr CounterRng split(std::uint64_t stream) const noexcept {
    return CounterRng(at(stream ^ 0xA0761D6478BD642FULL), stream);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
};

/// Sequential convenience wrapper over CounterRng.
class RngStream {
 public:
  explicit constexpr RngStream(CounterRng rng) noexcept : rng_(rng) {}
  std::uint64_t next() noexcept { return rng_.at(counter_++); }
  std::uint64_t below(std::uint64_t bound) noexcept { return rng_.below(counter_++, bound); }

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace hyperturan
