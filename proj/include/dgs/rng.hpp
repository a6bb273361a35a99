#pragma once

#include <cstdint>
#include <random>

namespace dgs {

// splitmix64 finalizer; used to derive independent per-sample seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept
{
    return mix_seed(mix_seed(a) ^ (b * 0xd1b54a32d192ed03ULL));
}

/// Bit source with a platform-independent stream (mt19937_64 is fully specified;
/// the std distributions are not, so callers draw raw bits).
class BitStream {
public:
    explicit BitStream(std::uint64_t seed) : engine_(seed) {}

    bool next_bit()
    {
        if (left_ == 0) {
            buffer_ = engine_();
            left_ = 64;
        }
        const bool b = buffer_ & 1u;
        buffer_ >>= 1;
        --left_;
        return b;
    }

    std::uint64_t next_word() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return engine_();
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + v % span;
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t buffer_ = 0;
    unsigned left_ = 0;
};

} // namespace dgs
