#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace gxstplc {

// Counter-based SplitMix64 stream. Output depends only on (seed, counter),
// which keeps runs reproducible across platforms.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        for (;;) {
            const std::uint64_t r = (*this)();
            if (r < limit) return r % bound;
        }
    }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

// Independent child seed for a named stream (FNV-1a of the tag, then mixed).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return CounterRng::mix(master ^ CounterRng::mix(h));
}

} // namespace gxstplc
