#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace wildscope {

/// 64-bit FNV-1a over a byte string. Used for stable content digests and
/// per-origin seed derivation; stable across platforms and runs, unlike
/// std::hash.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded generator with bounded draws implemented via masked rejection.
/// std::uniform_int_distribution is implementation-defined, so it is not
/// used anywhere results must be reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < n) return v;
        }
    }

    /// Uniform integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform nonzero integer in [-bound, bound].
    long long nonzero_offset(long long bound) {
        long long v = static_cast<long long>(below(static_cast<std::uint64_t>(2 * bound)));
        return v < bound ? v - bound : v - bound + 1;
    }

    bool coin() { return (engine_() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Seed for one origin's private generator: independent of every other
/// origin and of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view origin_raw) {
    return splitmix64(master_seed ^ fnv1a64(origin_raw));
}

} // namespace wildscope
