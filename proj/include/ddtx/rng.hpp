#ifndef DDTX_RNG_HPP
#define DDTX_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ddtx {

inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-style splitmix64 stream.  Chosen over <random> engines so that
/// streams are cheap to derive from (seed, index) keys, state is a single
/// u64 that serializes bit-exactly, and results do not depend on the
/// standard library's distribution implementations.
struct Rng {
    uint64_t state = 0;

    Rng() = default;
    explicit Rng(uint64_t seed) : state(seed) {}

    /// Independent stream keyed by up to three indices (domain-separated).
    static Rng stream(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t dom = 0) {
        uint64_t s = mix64(seed ^ (0x6A09E667F3BCC908ull + dom));
        s = mix64(s ^ a);
        s = mix64(s ^ (b + 0x510E527FADE682D1ull));
        return Rng(s);
    }

    uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1].
    double uniform() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform integer in [0, n).  Multiply-shift; bias is negligible for
    /// the small n used here and the mapping is platform-independent.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller.  No cached spare: two uniforms per
    /// draw keeps the stream state a pure counter.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
};

}  // namespace ddtx

#endif  // DDTX_RNG_HPP
