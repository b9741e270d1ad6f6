// Homogeneous Poisson point process samples in a box, plus the cell-grid
// spatial index used by the thinned edge engine and neighbor queries.
#pragma once

#include <cstdint>
#include <vector>

#include "sfp/geometry.hpp"

namespace sfp {

// One PPP draw. Coordinates are stored structure-of-arrays (one vector per
// axis) so batch kernels can run on them directly. Immutable by convention
// after construction.
struct PointSet {
    BoxGeometry geometry;
    double intensity = 1.0;
    std::uint64_t seed = 0;
    std::vector<double> coords[kMaxDim];  // coords[ax][i]; axes >= dim stay empty

    std::size_t size() const { return coords[0].size(); }

    Point point(std::size_t i) const {
        Point p{0.0, 0.0, 0.0};
        for (int ax = 0; ax < geometry.dim; ++ax) p[ax] = coords[ax][i];
        return p;
    }
};

// Count drawn first (Poisson(lambda * n^d)), then coordinates i.i.d. uniform
// in the box, all from one stream: regeneration is bit-identical.
PointSet sample_ppp(const BoxGeometry& geometry, double intensity, std::uint64_t seed);

// Regular grid over the box. Cells are an index, never a probabilistic
// object; every point is binned exactly once.
struct CellGrid {
    double cell_side = 1.0;
    int dim = 1;
    int per_axis[kMaxDim] = {1, 1, 1};
    std::vector<std::vector<std::uint32_t>> cells;  // linear cell index -> point indices

    int axis_cell(int ax, double coord, double half_side) const {
        int c = static_cast<int>((coord + half_side) / cell_side);
        if (c < 0) c = 0;
        if (c >= per_axis[ax]) c = per_axis[ax] - 1;
        return c;
    }

    std::size_t linear_index(const int c[kMaxDim]) const {
        std::size_t idx = 0;
        for (int ax = dim - 1; ax >= 0; --ax) idx = idx * per_axis[ax] + c[ax];
        return idx;
    }

    std::size_t cell_count() const { return cells.size(); }
};

CellGrid build_cell_grid(const PointSet& ps, double cell_side);

// Default cell side from the module contract: max(1, n/ceil(n)).
double default_cell_side(const BoxGeometry& geometry);

// Linear cell index of a point.
std::size_t cell_index_of(const CellGrid& grid, const BoxGeometry& geometry, const Point& p);

}  // namespace sfp
