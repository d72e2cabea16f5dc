#pragma once

#include <cstdint>
#include <random>

namespace pagraph {

// splitmix64 finalizer; used to whiten seeds and derive per-replication
// streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream seed for replication j of a base seed: identical on every host,
// independent of how replications are scheduled.
inline std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t replication) {
    return splitmix64(base_seed ^ splitmix64(replication));
}

// mt19937_64 with portable draw helpers. The standard distributions are not
// bit-reproducible across library implementations, so uniform doubles and
// bounded integers are derived from raw 64-bit words here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n); rejection-free Lemire reduction.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t x = engine_();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = static_cast<__uint128_t>(engine_()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pagraph
