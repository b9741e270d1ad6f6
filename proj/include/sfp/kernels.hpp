// Data-parallel inner loops of the edge sweep, in two interchangeable
// implementations: a scalar reference and an AVX2 variant selected at
// runtime. Both produce bit-identical output (enforced by tests); the whole
// library is compiled without fp contraction so the lane arithmetic of the
// SIMD variant matches the scalar operation order exactly.
#pragma once

#include <cstddef>
#include <cstdint>

namespace sfp::kernels {

enum class Isa { Scalar, Avx2 };

// Pointers to the point coordinates of one batch, structure-of-arrays.
struct PointsSoA {
    const double* x[3] = {nullptr, nullptr, nullptr};
};

// r2_out[k] = squared distance between `origin` and point k, minimum-image
// when side > 0, plain Euclidean when side == 0.
using R2Fn = void (*)(const double origin[3], PointsSoA pts, int dim, double side,
                      std::size_t count, double* r2_out);

// u_out[k] = pair uniform for (seed, {i, js[k]}), identical to
// PairRandom::u01.
using PairU01Fn = void (*)(std::uint64_t mixed_seed, std::uint32_t i, const std::uint32_t* js,
                           std::size_t count, double* u_out);

// Survivor screen: keeps k when u[k] < wi * wj[k] * bound_by_octave[exp2(r2[k])],
// where bound_by_octave is a 2048-entry table indexed by the biased binary
// exponent of r2 that overestimates r2^{-alpha/2} on each octave. Survivor
// indices are appended to surv_out; returns how many.
using ScreenFn = std::size_t (*)(const double* r2, const double* u, double wi, const double* wj,
                                 const double* bound_by_octave, std::size_t count,
                                 std::uint32_t* surv_out);

struct KernelSet {
    R2Fn r2 = nullptr;
    PairU01Fn pair_u01 = nullptr;
    ScreenFn screen = nullptr;
    Isa isa = Isa::Scalar;
};

const KernelSet& scalar_kernels();
const KernelSet& avx2_kernels();  // only valid to call if avx2_available()

bool avx2_available();

// Active set: AVX2 when available unless overridden by set_isa() or by the
// environment variable SFP_SIMD=scalar. Selection never changes results.
const KernelSet& active_kernels();
void set_isa(Isa isa);

// Fills the 2048-entry octave bound table for the screen: entry e covers
// r2 in [2^(e-1023), 2^(e-1022)) and holds (1+1e-9) * (2^(e-1023))^{-alpha/2}.
// Entries whose true power over- or underflows are +inf (forcing the exact
// path) or 0 respectively.
void fill_octave_bounds(double alpha, double* table2048);

}  // namespace sfp::kernels
