#pragma once

#include <cstdint>

namespace thop {

// splitmix64 step; also the core of Rng below. Chosen over std::mt19937 +
// std::uniform_*_distribution because the stdlib distributions are
// implementation-defined and we need byte-stable output per seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
    std::uint64_t s = a;
    s = splitmix64(s) ^ (b + 0x9e3779b97f4a7c15ULL);
    s = splitmix64(s) ^ (c + 0xbf58476d1ce4e5b9ULL);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n); modulo bias is irrelevant at our ranges
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long long range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace thop
