#pragma once

#include <cstdint>
#include <string_view>

namespace chg {

/// Identifies one position in the keyed stochastic stream. Draws are a pure
/// function of the key, so exploration order and retries never perturb the
/// sampled sequence.
struct DrawKey {
  std::uint64_t seed = 0;
  std::string_view stream;       // usually an edge id
  std::int64_t iteration = 0;    // cycle frame
  std::uint32_t phase = 0;       // 0 = viability, 1 = relation
  std::uint32_t ordinal = 0;     // draw index within one evaluation
};

/// Uniform draw in [0, 1) for the key; stable across platforms.
double draw_u01(const DrawKey& key);

std::uint64_t fnv1a64(std::string_view text);
std::uint64_t splitmix64(std::uint64_t x);

} // namespace chg
