#pragma once

#include <cstdint>

namespace zr {

// Counter-based generator (splitmix64 over a keyed counter). Streams derived
// from (seed, stream) pairs are independent in practice and reproducible
// regardless of call interleaving, which keeps parallel and serial runs
// byte-identical.
class Rng {
  public:
    explicit Rng(uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)), ctr_(0) {}

    static Rng stream(uint64_t seed, uint64_t stream_id) { return Rng(seed ^ stream_id); }

    uint64_t next() { return mix(key_ + (++ctr_) * 0x9e3779b97f4a7c15ull); }

    // Unbiased integer in [0, bound) via Lemire's method.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        while (true) {
            uint64_t x = next();
            unsigned __int128 m = (unsigned __int128)x * bound;
            uint64_t lo = (uint64_t)m;
            if (lo >= bound || lo >= (-bound) % bound) return (uint64_t)(m >> 64);
        }
    }

    double uniform01() { return (next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

  private:
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t ctr_;
};

} // namespace zr
