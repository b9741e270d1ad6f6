// Box geometry and distances (free boundary or torus minimum-image).
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sfp {

inline constexpr int kMaxDim = 3;

enum class Topology { Torus, FreeBoundary };

// The d-cube of side `side` centered at the origin, with either periodic
// (minimum-image) or free-boundary metric.
struct BoxGeometry {
    int dim = 2;
    double side = 1.0;
    Topology topology = Topology::Torus;

    BoxGeometry() = default;
    BoxGeometry(int d, double n, Topology topo = Topology::Torus)
        : dim(d), side(n), topology(topo) {
        validate();
    }

    void validate() const {
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("BoxGeometry: dim must be in [1,3]");
        if (!(side > 0.0)) throw std::invalid_argument("BoxGeometry: side must be positive");
    }

    double volume() const {
        double v = 1.0;
        for (int k = 0; k < dim; ++k) v *= side;
        return v;
    }

    double half_side() const { return 0.5 * side; }
};

using Point = std::array<double, kMaxDim>;  // unused axes are zero

// Wrap a coordinate difference into (-side/2, side/2] up to sign at the
// boundary; |result| <= side/2 always, which is all a metric needs.
inline double min_image(double diff, double side) {
    return diff - side * std::nearbyint(diff / side);
}

inline double squared_distance(const BoxGeometry& g, const Point& x, const Point& y) {
    double r2 = 0.0;
    if (g.topology == Topology::Torus) {
        for (int k = 0; k < g.dim; ++k) {
            const double dk = min_image(x[k] - y[k], g.side);
            r2 += dk * dk;
        }
    } else {
        for (int k = 0; k < g.dim; ++k) {
            const double dk = x[k] - y[k];
            r2 += dk * dk;
        }
    }
    return r2;
}

inline double distance(const BoxGeometry& g, const Point& x, const Point& y) {
    return std::sqrt(squared_distance(g, x, y));
}

}  // namespace sfp
