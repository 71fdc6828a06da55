#include "hamsieve/random.hpp"

#include <stdexcept>

namespace hamsieve {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kBump0 = 0x9E3779B9u;
constexpr std::uint32_t kBump1 = 0xBB67AE85u;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

Philox::Philox(std::uint64_t seed, std::uint64_t stream, std::uint32_t purpose)
    : stream_(stream) {
    // Distinct purposes get unrelated keys; the stream id sits in the upper
    // counter words, so (seed, stream, purpose) triples never share blocks.
    const std::uint64_t key = splitmix64(seed + 0x9E3779B97F4A7C15ull * purpose);
    key_ = {static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
}

void Philox::refill() {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(block_),
        static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32),
    };
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
        ctr = {
            static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0,
            static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1,
            static_cast<std::uint32_t>(p0),
        };
        k0 += kBump0;
        k1 += kBump1;
    }
    buf_ = ctr;
    unread_ = 4;
    ++block_;
}

std::uint64_t Philox::next() {
    if (unread_ < 2) refill();
    const std::uint32_t lo = buf_[4 - unread_];
    const std::uint32_t hi = buf_[5 - unread_];
    unread_ -= 2;
    return static_cast<std::uint64_t>(hi) << 32 | lo;
}

std::uint64_t Philox::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t zone = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= zone);
    return r % bound;
}

std::uint64_t Philox::uniform_in(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_in: empty range");
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();  // full 64-bit range
    return lo + uniform_below(span);
}

bool Philox::coin() {
    return (next() & 1u) != 0;
}

}  // namespace hamsieve
