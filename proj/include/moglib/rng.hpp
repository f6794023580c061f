#ifndef MOGLIB_RNG_HPP
#define MOGLIB_RNG_HPP

#include <cstdint>

namespace moglib {

// Counter-based splittable generator. Output i of stream s is a pure
// function of (seed, s, i): replay is bit-identical no matter how work is
// scheduled, and distinct stream ids give independent-looking substreams.
// The mixing function is the SplitMix64 finalizer (Steele, Lea & Flood 2014).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
        : seed_(seed), stream_id_(stream_id), counter_(0) {
        base_  = mix(seed + 0x9e3779b97f4a7c15ull);
        tweak_ = mix(stream_id ^ 0xd1b54a32d192ed03ull);
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t word = base_ + counter_ * 0x9e3779b97f4a7c15ull;
        ++counter_;
        return mix(word ^ tweak_);
    }

    // Uniform on the open interval (0,1); never returns an exact endpoint,
    // so inverse-CDF sampling stays finite.
    double next_uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    RandomStream substream(std::uint64_t id) const noexcept {
        return RandomStream(seed_, stream_id_ ^ mix(id + 0xbf58476d1ce4e5b9ull));
    }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_;
    std::uint64_t base_;
    std::uint64_t tweak_;
};

}  // namespace moglib

#endif
