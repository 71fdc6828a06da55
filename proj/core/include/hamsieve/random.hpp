#pragma once

#include <array>
#include <cstdint>

namespace hamsieve {

// Philox4x32-10 counter-based generator (Salmon et al. constants).
// A stream is addressed by (seed, stream, purpose): construction is cheap,
// streams never overlap, and output is identical across platforms. The
// detection engine gives every repetition its own stream and keeps separate
// purposes for vertex sampling, arc weights and diagonal perturbations, so
// replaying any single repetition needs nothing but the master seed.
class Philox {
public:
    // Purposes used by this project. Plain enum so callers can extend.
    enum Purpose : std::uint32_t {
        kSampleSet = 0,
        kArcWeights = 1,
        kPerturbation = 2,
        kInstanceGen = 3,
        kGeneric = 4,
    };

    Philox(std::uint64_t seed, std::uint64_t stream, std::uint32_t purpose);

    // Next 64 random bits.
    std::uint64_t next();

    // Unbiased draw from [0, bound); bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Unbiased draw from [lo, hi], both inclusive; requires lo <= hi.
    std::uint64_t uniform_in(std::uint64_t lo, std::uint64_t hi);

    // Fair coin.
    bool coin();

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int unread_ = 0;
};

}  // namespace hamsieve
