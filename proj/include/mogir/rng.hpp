#pragma once

#include <array>
#include <cstdint>

namespace mogir::rng {

/// Philox4x32-10 counter-based generator block. Stateless: the output
/// is a pure function of (counter, key), so any (seed, path, t) address
/// maps to the same draw regardless of call order or thread schedule.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Uniform in (0,1) built from the top 52 bits of two 32-bit words;
/// never 0 or 1.
double to_unit_double(std::uint32_t hi, std::uint32_t lo);

/// Three independent standard normals addressed by (seed, path, t),
/// via Box-Muller on Philox output. No rejection step, so the draw
/// count per address is fixed.
std::array<double, 3> standard_normal_triple(std::uint64_t seed, std::uint64_t path,
                                             std::uint64_t t);

}  // namespace mogir::rng
