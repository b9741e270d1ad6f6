// Reproducible pseudo-random streams. All sampling in the library goes
// through these generators rather than <random> distributions, whose
// output is not pinned down by the standard; the sequences here are
// bit-identical across platforms and compilers.
#pragma once

#include <cstdint>
#include <cmath>
#include <string_view>

namespace sfp::rng {

// splitmix64 finalizer (Stafford mix13). Used for seeding, for derived
// seeds, and as the core of the pair-keyed edge randomness.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t GOLDEN64 = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

// Derived seeds are a pure function of (master seed, stage name, index).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view stage,
                                    std::uint64_t index = 0) {
    std::uint64_t h = mix64(master ^ fnv1a64(stage));
    return mix64(h + GOLDEN64 * (index + 1));
}

// xoshiro256** (Blackman/Vigna), seeded through splitmix64.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += GOLDEN64;
            word = mix64(sm);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0,1), 53-bit resolution.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in (0,1]; safe to feed into inverse-tail transforms.
    double u01_open_below() { return 1.0 - u01(); }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4]{};
};

// Poisson(mu) by sequential inversion. Large means are split into chunks of
// at most 256 so that exp(-chunk) stays comfortably inside normal range;
// the sum of independent Poisson chunks has the exact target law. One
// uniform is consumed per chunk.
inline std::uint64_t poisson(Xoshiro256ss& gen, double mu) {
    std::uint64_t total = 0;
    while (mu > 0) {
        const double chunk = mu > 256.0 ? 256.0 : mu;
        mu -= chunk;
        const double u = gen.u01();
        double pk = std::exp(-chunk);
        double cum = pk;
        std::uint64_t k = 0;
        while (u > cum) {
            ++k;
            pk *= chunk / static_cast<double>(k);
            cum += pk;
            if (pk < 1e-18 && static_cast<double>(k) > chunk) break;  // cum saturated
        }
        total += k;
    }
    return total;
}

}  // namespace sfp::rng
