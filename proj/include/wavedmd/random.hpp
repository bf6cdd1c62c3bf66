#pragma once

#include <cstdint>
#include <random>

namespace wavedmd {

using Rng = std::mt19937_64;

/// Uniform on [0, 1) from the top 53 bits of one draw. Unlike
/// std::uniform_real_distribution the mapping is fixed, so seeded streams are
/// identical across standard libraries.
inline double unit_uniform(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_in(Rng& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

}  // namespace wavedmd
