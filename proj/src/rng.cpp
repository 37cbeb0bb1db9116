#include "mogir/rng.hpp"

#include <cmath>

namespace mogir::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        philox_round(counter, key);
    }
    return counter;
}

double to_unit_double(std::uint32_t hi, std::uint32_t lo) {
    // 52 mantissa bits plus a half-ulp offset: the +0.5 stays exactly
    // representable at the top of the range, so the result is bounded
    // away from both 0 and 1.
    const std::uint64_t v = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(v >> 12) + 0.5) * 0x1.0p-52;
}

std::array<double, 3> standard_normal_triple(std::uint64_t seed, std::uint64_t path,
                                             std::uint64_t t) {
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                              static_cast<std::uint32_t>(seed >> 32)};
    const auto block = [&](std::uint64_t n) {
        return philox4x32({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n >> 32),
                           static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)},
                          key);
    };
    // Two blocks per (path, t): Box-Muller needs 4 uniforms for 3 normals.
    const auto b0 = block(2 * t);
    const auto b1 = block(2 * t + 1);
    const double u1 = to_unit_double(b0[0], b0[1]);
    const double u2 = to_unit_double(b0[2], b0[3]);
    const double u3 = to_unit_double(b1[0], b1[1]);
    const double u4 = to_unit_double(b1[2], b1[3]);

    const double two_pi = 2.0 * M_PI;
    const double r1 = std::sqrt(-2.0 * std::log(u1));
    const double r2 = std::sqrt(-2.0 * std::log(u3));
    return {r1 * std::cos(two_pi * u2), r1 * std::sin(two_pi * u2), r2 * std::cos(two_pi * u4)};
}

}  // namespace mogir::rng
