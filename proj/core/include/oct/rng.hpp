#ifndef OCT_RNG_HPP
#define OCT_RNG_HPP

#include <cstdint>
#include <vector>

namespace oct {

// SplitMix64 generator. The standard library engines are portable but the
// distributions are not; every random draw in this project goes through this
// struct so that a fixed seed gives byte-identical results on any platform.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound); bound must be positive.
    uint64_t below(uint64_t bound) {
        uint64_t min = (0 - bound) % bound;
        uint64_t r;
        do {
            r = next();
        } while (r < min);
        return r % bound;
    }

    int pick(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

    // 53-bit mantissa uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }
};

// Counter-mode seed derivation: one master seed plus stream indices yields
// independent deterministic substreams (used for per-iteration reseeding).
inline uint64_t mix_seed(uint64_t master, uint64_t a, uint64_t b) {
    Rng r(master ^ (a * 0xd1342543de82ef95ULL) ^ (b * 0xaf251af3b0f025b5ULL));
    r.next();
    return r.next();
}

} // namespace oct

#endif
