#include "chg/rng.hpp"

namespace chg {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double draw_u01(const DrawKey& key) {
  std::uint64_t x = splitmix64(key.seed);
  x = splitmix64(x ^ fnv1a64(key.stream));
  x = splitmix64(x ^ static_cast<std::uint64_t>(key.iteration));
  x = splitmix64(x ^ ((static_cast<std::uint64_t>(key.phase) << 32) | key.ordinal));
  // 53 random bits -> [0, 1)
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

} // namespace chg
