// Thin quadrature layer: adaptive Gauss-Kronrod panels plus geometric panel
// sweeps for half-infinite ranges with analytic remainder bounds.
#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

namespace sfp::quad {

// Adaptive GK15 on a finite interval. `tol` is relative to the L1 norm of
// the integrand, which for the nonnegative integrands used throughout the
// library makes it an absolute-relative hybrid.
template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-12, int max_depth = 14) {
    if (!(b > a)) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, tol,
                                                                         &err);
}

// Integrate f over [a, inf) by octave panels [a*2^k, a*2^(k+1)].
// `remainder_bound(T)` must bound |int_T^inf f| from above; the sweep stops
// once that bound (or the running panel size) drops below abs_tol and the
// bound's midpoint is credited. Requires a > 0.
template <typename F, typename R>
double integrate_geometric_to_inf(const F& f, double a, const R& remainder_bound,
                                  double abs_tol, double panel_tol = 1e-12) {
    double total = 0.0;
    double lo = a;
    for (int k = 0; k < 1100; ++k) {
        const double rem = remainder_bound(lo);
        if (rem <= abs_tol) {
            total += 0.5 * rem;
            return total;
        }
        const double hi = 2.0 * lo;
        total += integrate(f, lo, hi, panel_tol);
        lo = hi;
    }
    total += 0.5 * remainder_bound(lo);
    return total;
}

// Integrate f over (0, a] by octave panels shrinking toward zero.
// `remainder_bound(eps)` must bound |int_0^eps f|.
template <typename F, typename R>
double integrate_geometric_to_zero(const F& f, double a, const R& remainder_bound,
                                   double abs_tol, double panel_tol = 1e-12) {
    double total = 0.0;
    double hi = a;
    for (int k = 0; k < 1100; ++k) {
        const double rem = remainder_bound(hi);
        if (rem <= abs_tol) {
            total += 0.5 * rem;
            return total;
        }
        const double lo = 0.5 * hi;
        total += integrate(f, lo, hi, panel_tol);
        hi = lo;
    }
    total += 0.5 * remainder_bound(hi);
    return total;
}

}  // namespace sfp::quad
