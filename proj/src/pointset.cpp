#include "sfp/pointset.hpp"

#include <cmath>
#include <stdexcept>

#include "sfp/rng.hpp"

namespace sfp {

PointSet sample_ppp(const BoxGeometry& geometry, double intensity, std::uint64_t seed) {
    geometry.validate();
    if (!(intensity > 0.0)) throw std::invalid_argument("sample_ppp: intensity must be positive");

    PointSet ps;
    ps.geometry = geometry;
    ps.intensity = intensity;
    ps.seed = seed;

    rng::Xoshiro256ss gen(seed);
    const std::uint64_t count = rng::poisson(gen, intensity * geometry.volume());
    for (int ax = 0; ax < geometry.dim; ++ax) ps.coords[ax].resize(count);
    const double side = geometry.side;
    for (std::uint64_t i = 0; i < count; ++i)
        for (int ax = 0; ax < geometry.dim; ++ax)
            ps.coords[ax][i] = (gen.u01() - 0.5) * side;
    return ps;
}

double default_cell_side(const BoxGeometry& geometry) {
    const double n = geometry.side;
    return std::fmax(1.0, n / std::ceil(n));
}

CellGrid build_cell_grid(const PointSet& ps, double cell_side) {
    const BoxGeometry& g = ps.geometry;
    if (!(cell_side > 0.0) || cell_side > g.side)
        throw std::invalid_argument("build_cell_grid: need 0 < cell_side <= side");

    CellGrid grid;
    grid.cell_side = cell_side;
    grid.dim = g.dim;
    std::size_t total = 1;
    for (int ax = 0; ax < g.dim; ++ax) {
        grid.per_axis[ax] = static_cast<int>(std::ceil(g.side / cell_side));
        if (grid.per_axis[ax] < 1) grid.per_axis[ax] = 1;
        total *= static_cast<std::size_t>(grid.per_axis[ax]);
    }
    grid.cells.resize(total);
    const double half = g.half_side();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        int c[kMaxDim] = {0, 0, 0};
        for (int ax = 0; ax < g.dim; ++ax) c[ax] = grid.axis_cell(ax, ps.coords[ax][i], half);
        grid.cells[grid.linear_index(c)].push_back(static_cast<std::uint32_t>(i));
    }
    return grid;
}

std::size_t cell_index_of(const CellGrid& grid, const BoxGeometry& geometry, const Point& p) {
    int c[kMaxDim] = {0, 0, 0};
    for (int ax = 0; ax < geometry.dim; ++ax)
        c[ax] = grid.axis_cell(ax, p[ax], geometry.half_side());
    return grid.linear_index(c);
}

}  // namespace sfp
