#pragma once

#include <cstdint>

#include "dsn/geometry.hpp"

namespace dsn {

// 64-bit linear congruential generator (Knuth's MMIX constants).
//
// The generator is part of the reproducibility contract: a given seed yields
// the same stream on every platform, so the constants and the draw order used
// by the simulator must never change.
class Lcg64 {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    constexpr Lcg64() = default;
    constexpr explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t state() const noexcept { return state_; }

    // Advances the state and returns the new state.
    constexpr std::uint64_t next_u64() noexcept {
        state_ = state_ * kMultiplier + kIncrement;
        return state_;
    }

    // Uniform in [0, 1) from the top 53 bits of the next value.
    double next_unit() noexcept { return unit_from_bits(next_u64()); }

    static constexpr double unit_from_bits(std::uint64_t value) noexcept {
        return static_cast<double>(value >> 11) * 0x1.0p-53;
    }

    friend constexpr bool operator==(const Lcg64&, const Lcg64&) = default;

private:
    std::uint64_t state_ = 0;
};

// Uniform point in the open disk of radius r centred on the origin.
// Consumes exactly two draws: radius first, then angle.
Position sample_disk(Lcg64& rng, double r);

// The deterministic mapping behind sample_disk, exposed for testing.
Position disk_point(double u_radius, double u_angle, double r);

} // namespace dsn
