#include "citemetrics/rng.hpp"

#include <cmath>
#include <numbers>

namespace citemetrics {

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) noexcept {
  SplitMix64 expand(seed);
  for (auto& word : s_) word = expand();
}

std::uint64_t uniform_below(Xoshiro256StarStar& rng, std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  u128 m = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double uniform_unit(Xoshiro256StarStar& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(Xoshiro256StarStar& rng) noexcept {
  // 1 - u lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t key) noexcept {
  SplitMix64 mix(master);
  const std::uint64_t base = mix();
  SplitMix64 keyed(base ^ key);
  return keyed();
}

std::uint64_t stream_seed(std::uint64_t master, std::string_view key) noexcept {
  return stream_seed(master, fnv1a64(key));
}

}  // namespace citemetrics
