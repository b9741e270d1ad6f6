// Counter-based randomness keyed on unordered vertex pairs. Every edge
// decision reads one uniform that depends only on (seed, {i,j}), so edge
// sampling is order-independent: engines and thread schedules cannot change
// the generated graph.
#pragma once

#include <algorithm>
#include <cstdint>

#include "sfp/rng.hpp"

namespace sfp {

struct PairRandom {
    std::uint64_t seed = 0;

    explicit PairRandom(std::uint64_t s) : seed(rng::mix64(s ^ rng::GOLDEN64)) {}

    std::uint64_t bits(std::uint32_t i, std::uint32_t j) const {
        const std::uint64_t lo = std::min(i, j);
        const std::uint64_t hi = std::max(i, j);
        std::uint64_t h = rng::mix64(seed ^ (lo + rng::GOLDEN64));
        return rng::mix64(h ^ (hi + 0xD1B54A32D192ED03ULL));
    }

    // Uniform in [0,1), 52-bit resolution (52 keeps the integer-to-double
    // step exactly representable for the SIMD path as well).
    double u01(std::uint32_t i, std::uint32_t j) const {
        return static_cast<double>(bits(i, j) >> 12) * 0x1.0p-52;
    }
};

}  // namespace sfp
