#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace citemetrics {

/// SplitMix64 (Steele, Lea & Flood). Used to expand seeds.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman & Vigna), state filled from SplitMix64(seed).
/// Every random draw in the library goes through this generator and the
/// helper functions below, so results are identical across platforms and
/// standard library implementations.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;

  std::uint64_t operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

/// Unbiased integer in [0, bound) by Lemire's multiply-and-reject method.
/// `bound` must be > 0.
std::uint64_t uniform_below(Xoshiro256StarStar& rng, std::uint64_t bound);

/// Double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Xoshiro256StarStar& rng) noexcept;

/// Standard normal deviate via Box-Muller; consumes exactly two draws.
double standard_normal(Xoshiro256StarStar& rng) noexcept;

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Seed for an independent per-key stream derived from a master seed.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t key) noexcept;
std::uint64_t stream_seed(std::uint64_t master, std::string_view key) noexcept;

}  // namespace citemetrics
