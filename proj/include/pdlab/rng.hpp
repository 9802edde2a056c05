#pragma once

#include <cstdint>
#include <cmath>
#include <cstring>
#include <string_view>

#include "pdlab/errors.hpp"

namespace pdlab {

// Deterministic, implementation-pinned RNG machinery. std:: distributions are
// not used anywhere because their output is unspecified across standard
// library versions; reproducibility of every experiment depends on the exact
// draw sequence below.

// splitmix64 finalizer; also the stream-derivation hash.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t h, uint64_t v) { return mix64(mix64(h) + v); }

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t double_bits(double d) {
    uint64_t u;
    std::memcpy(&u, &d, sizeof(u));
    return u;
}

// Per-replica stream seed: hash(base, experiment name, replica index).
inline uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index) {
    return hash_combine(hash_combine(mix64(base), fnv1a64(tag)), index);
}

// xoshiro256** seeded by splitmix64 expansion.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t s = seed;
        for (auto& w : state_) {
            s += 0x9e3779b97f4a7c15ULL;
            uint64_t z = s;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) {
        // Rejection to avoid modulo bias.
        const uint64_t limit = n * (UINT64_MAX / n);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    double exponential(double rate) { return -std::log1p(-next_unit()) / rate; }

    // Exact Poisson sampler: count arrivals of a unit-rate process up to
    // `mean`. O(mean) draws, no underflow for large means.
    long poisson(double mean) {
        if (mean < 0) throw InvalidParameter("poisson mean must be >= 0");
        long k = 0;
        double acc = 0.0;
        while (true) {
            acc += exponential(1.0);
            if (acc > mean) return k;
            ++k;
        }
    }

    Rng split(uint64_t stream) { return Rng(hash_combine(next_u64(), stream)); }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

// Keyed one-shot uniform: a pure function of (seed, key). Used for edge times
// and bond states so that the mark attached to an edge depends only on the
// edge's endpoint coordinates, not on the surrounding configuration.
inline double keyed_unit(uint64_t seed, uint64_t key) {
    uint64_t h = hash_combine(mix64(seed), key);
    h = mix64(h);
    return double(h >> 11) * 0x1.0p-53;
}

} // namespace pdlab
