#include "sfp/kernels.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "sfp/rng.hpp"

namespace sfp::kernels {
namespace {

template <int D, bool TORUS>
void r2_impl(const double origin[3], PointsSoA pts, double side, std::size_t count,
             double* r2_out) {
    for (std::size_t k = 0; k < count; ++k) {
        double r2 = 0.0;
        for (int ax = 0; ax < D; ++ax) {
            double d = origin[ax] - pts.x[ax][k];
            if constexpr (TORUS) d -= side * std::nearbyint(d / side);
            r2 += d * d;
        }
        r2_out[k] = r2;
    }
}

void r2_scalar(const double origin[3], PointsSoA pts, int dim, double side, std::size_t count,
               double* r2_out) {
    const bool torus = side > 0.0;
    switch (dim * 2 + (torus ? 1 : 0)) {
        case 2 * 1 + 1: r2_impl<1, true>(origin, pts, side, count, r2_out); break;
        case 2 * 1 + 0: r2_impl<1, false>(origin, pts, side, count, r2_out); break;
        case 2 * 2 + 1: r2_impl<2, true>(origin, pts, side, count, r2_out); break;
        case 2 * 2 + 0: r2_impl<2, false>(origin, pts, side, count, r2_out); break;
        case 2 * 3 + 1: r2_impl<3, true>(origin, pts, side, count, r2_out); break;
        case 2 * 3 + 0: r2_impl<3, false>(origin, pts, side, count, r2_out); break;
        default: break;
    }
}

void pair_u01_scalar(std::uint64_t mixed_seed, std::uint32_t i, const std::uint32_t* js,
                     std::size_t count, double* u_out) {
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint32_t j = js[k];
        const std::uint64_t lo = i < j ? i : j;
        const std::uint64_t hi = i < j ? j : i;
        std::uint64_t h = rng::mix64(mixed_seed ^ (lo + rng::GOLDEN64));
        h = rng::mix64(h ^ (hi + 0xD1B54A32D192ED03ULL));
        u_out[k] = static_cast<double>(h >> 12) * 0x1.0p-52;
    }
}

std::size_t screen_scalar(const double* r2, const double* u, double wi, const double* wj,
                          const double* bound_by_octave, std::size_t count,
                          std::uint32_t* surv_out) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const int e = static_cast<int>(std::bit_cast<std::uint64_t>(r2[k]) >> 52);
        const double bound = (wi * wj[k]) * bound_by_octave[e];
        if (u[k] < bound) surv_out[n++] = static_cast<std::uint32_t>(k);
    }
    return n;
}

const KernelSet kScalar = {&r2_scalar, &pair_u01_scalar, &screen_scalar, Isa::Scalar};

Isa pick_default_isa() {
    if (const char* env = std::getenv("SFP_SIMD"); env && env[0] == 's') return Isa::Scalar;
    if (avx2_available()) return Isa::Avx2;
    return Isa::Scalar;
}

Isa g_isa = pick_default_isa();

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

bool avx2_available() {
#if defined(SFP_HAVE_AVX2_TU)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelSet& active_kernels() {
#if defined(SFP_HAVE_AVX2_TU)
    if (g_isa == Isa::Avx2 && avx2_available()) return avx2_kernels();
#endif
    return kScalar;
}

void set_isa(Isa isa) { g_isa = isa; }

void fill_octave_bounds(double alpha, double* table2048) {
    const double neg_half_alpha = -0.5 * alpha;
    for (int e = 0; e < 2048; ++e) {
        if (e == 0) {
            // zero / subnormal r2: force the exact path (p = 1 at r = 0)
            table2048[e] = std::numeric_limits<double>::infinity();
            continue;
        }
        double q = std::pow(std::ldexp(1.0, e - 1023), neg_half_alpha);
        // The 1e-9 headroom dwarfs every rounding in the screen comparison;
        // the floor keeps the bound certified across the subnormal band.
        q *= 1.0 + 1e-9;
        if (q < 1e-300) q = 1e-300;
        table2048[e] = q;
    }
}

}  // namespace sfp::kernels
