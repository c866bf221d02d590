#pragma once

#include <cstdint>
#include <random>

namespace feel {

using Rng = std::mt19937_64;

// Independent draw sequences inside one simulated server. Fleet and channel
// draws do not depend on the scheme, so schemes run with one master seed see
// the same vehicles and the same radio conditions.
enum class Stream : std::uint64_t {
  fleet = 0,
  channel = 1,
  departure = 2,
  scheme = 3,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t server_seed(std::uint64_t master_seed, std::uint64_t server_index) noexcept {
  return splitmix64(splitmix64(master_seed) ^ (server_index + 0x632be59bd9b4e019ULL));
}

inline Rng make_stream(std::uint64_t seed, Stream stream) {
  return Rng{splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream) + 1))};
}

// Uniform on [lo, hi) from the top 53 bits. std::uniform_real_distribution
// can round up to `hi` under libstdc++.
inline double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace feel
