// AVX2 variants of the edge-sweep kernels. Lane arithmetic mirrors the
// scalar reference operation for operation (no fma, division not reciprocal,
// round-to-nearest-even wrap), so outputs are bit-identical to the scalar
// kernels; tests enforce this.
#include "sfp/kernels.hpp"

#if (defined(__x86_64__) || defined(_M_X64)) && defined(SFP_HAVE_AVX2_TU)

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <cstring>

#include "sfp/rng.hpp"

namespace sfp::kernels {
namespace {

inline __m256i mullo64(__m256i a, __m256i b) {
    // 64x64 -> low 64 via 32-bit partial products (no _mm256_mullo_epi64 in AVX2)
    const __m256i lo_lo = _mm256_mul_epu32(a, b);
    const __m256i a_hi = _mm256_srli_epi64(a, 32);
    const __m256i b_hi = _mm256_srli_epi64(b, 32);
    const __m256i cross =
        _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
    return _mm256_add_epi64(lo_lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix64_v(__m256i z) {
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
    z = mullo64(z, _mm256_set1_epi64x(0xBF58476D1CE4E5B9ULL));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
    z = mullo64(z, _mm256_set1_epi64x(0x94D049BB133111EBULL));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
    return z;
}

// Exact uint64 -> double for values < 2^52.
inline __m256d u52_to_double(__m256i v) {
    const __m256d magic = _mm256_set1_pd(0x1.0p52);
    const __m256d d = _mm256_castsi256_pd(_mm256_or_si256(v, _mm256_castpd_si256(magic)));
    return _mm256_sub_pd(d, magic);
}

template <int D, bool TORUS>
inline void r2_block4(const double origin[3], const PointsSoA& pts, double side, std::size_t k,
                      double* r2_out) {
    const __m256d vside = _mm256_set1_pd(side);
    __m256d r2 = _mm256_setzero_pd();
    for (int ax = 0; ax < D; ++ax) {
        __m256d d = _mm256_sub_pd(_mm256_set1_pd(origin[ax]), _mm256_loadu_pd(pts.x[ax] + k));
        if constexpr (TORUS) {
            const __m256d q = _mm256_round_pd(_mm256_div_pd(d, vside),
                                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
            d = _mm256_sub_pd(d, _mm256_mul_pd(vside, q));
        }
        r2 = _mm256_add_pd(r2, _mm256_mul_pd(d, d));
    }
    _mm256_storeu_pd(r2_out + k, r2);
}

template <int D, bool TORUS>
void r2_loop(const double origin[3], PointsSoA pts, double side, std::size_t count,
             double* r2_out) {
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) r2_block4<D, TORUS>(origin, pts, side, k, r2_out);
    for (; k < count; ++k) {
        double r2 = 0.0;
        for (int ax = 0; ax < D; ++ax) {
            double d = origin[ax] - pts.x[ax][k];
            if constexpr (TORUS) d -= side * std::nearbyint(d / side);
            r2 += d * d;
        }
        r2_out[k] = r2;
    }
}

void r2_avx2(const double origin[3], PointsSoA pts, int dim, double side, std::size_t count,
             double* r2_out) {
    const bool torus = side > 0.0;
    switch (dim * 2 + (torus ? 1 : 0)) {
        case 2 * 1 + 1: r2_loop<1, true>(origin, pts, side, count, r2_out); break;
        case 2 * 1 + 0: r2_loop<1, false>(origin, pts, side, count, r2_out); break;
        case 2 * 2 + 1: r2_loop<2, true>(origin, pts, side, count, r2_out); break;
        case 2 * 2 + 0: r2_loop<2, false>(origin, pts, side, count, r2_out); break;
        case 2 * 3 + 1: r2_loop<3, true>(origin, pts, side, count, r2_out); break;
        case 2 * 3 + 0: r2_loop<3, false>(origin, pts, side, count, r2_out); break;
        default: break;
    }
}

void pair_u01_avx2(std::uint64_t mixed_seed, std::uint32_t i, const std::uint32_t* js,
                   std::size_t count, double* u_out) {
    const __m256i vi = _mm256_set1_epi64x(i);
    const __m256i vseed = _mm256_set1_epi64x(mixed_seed);
    const __m256i golden = _mm256_set1_epi64x(rng::GOLDEN64);
    const __m256i salt = _mm256_set1_epi64x(0xD1B54A32D192ED03ULL);
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        const __m256i vj = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(js + k)));
        // unsigned min/max of (i, j); values fit in 32 bits so 64-bit
        // signed comparison is safe
        const __m256i cmp = _mm256_cmpgt_epi64(vj, vi);
        const __m256i lo = _mm256_blendv_epi8(vj, vi, cmp);
        const __m256i hi = _mm256_blendv_epi8(vi, vj, cmp);
        __m256i h = mix64_v(_mm256_xor_si256(vseed, _mm256_add_epi64(lo, golden)));
        h = mix64_v(_mm256_xor_si256(h, _mm256_add_epi64(hi, salt)));
        const __m256d u =
            _mm256_mul_pd(u52_to_double(_mm256_srli_epi64(h, 12)), _mm256_set1_pd(0x1.0p-52));
        _mm256_storeu_pd(u_out + k, u);
    }
    for (; k < count; ++k) {
        const std::uint32_t j = js[k];
        const std::uint64_t lo = i < j ? i : j;
        const std::uint64_t hi = i < j ? j : i;
        std::uint64_t h = rng::mix64(mixed_seed ^ (lo + rng::GOLDEN64));
        h = rng::mix64(h ^ (hi + 0xD1B54A32D192ED03ULL));
        u_out[k] = static_cast<double>(h >> 12) * 0x1.0p-52;
    }
}

std::size_t screen_avx2(const double* r2, const double* u, double wi, const double* wj,
                        const double* bound_by_octave, std::size_t count,
                        std::uint32_t* surv_out) {
    std::size_t n = 0;
    const __m256d vwi = _mm256_set1_pd(wi);
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        const __m256d vr2 = _mm256_loadu_pd(r2 + k);
        const __m256i e = _mm256_srli_epi64(_mm256_castpd_si256(vr2), 52);
        const __m256d bound = _mm256_i64gather_pd(bound_by_octave, e, 8);
        const __m256d s =
            _mm256_mul_pd(_mm256_mul_pd(vwi, _mm256_loadu_pd(wj + k)), bound);
        const __m256d keep = _mm256_cmp_pd(_mm256_loadu_pd(u + k), s, _CMP_LT_OQ);
        int mask = _mm256_movemask_pd(keep);
        while (mask) {
            const int bit = __builtin_ctz(mask);
            surv_out[n++] = static_cast<std::uint32_t>(k + bit);
            mask &= mask - 1;
        }
    }
    for (; k < count; ++k) {
        const int e = static_cast<int>(std::bit_cast<std::uint64_t>(r2[k]) >> 52);
        const double bound = (wi * wj[k]) * bound_by_octave[e];
        if (u[k] < bound) surv_out[n++] = static_cast<std::uint32_t>(k);
    }
    return n;
}

const KernelSet kAvx2 = {&r2_avx2, &pair_u01_avx2, &screen_avx2, Isa::Avx2};

}  // namespace

const KernelSet& avx2_kernels() { return kAvx2; }

}  // namespace sfp::kernels

#endif
