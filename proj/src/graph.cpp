#include "sfp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "sfp/kernels.hpp"
#include "sfp/pair_random.hpp"

namespace sfp {
namespace {

// The one exact edge decision. Both engines funnel every emitted edge
// through this expression, which is what makes them bit-identical.
inline double edge_prob_r2(double wx, double wy, double r2, double neg_half_alpha) {
    if (r2 == 0.0) return 1.0;
    const double q = std::pow(r2, neg_half_alpha);
    return -std::expm1(-((wx * wy) * q));
}

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

WeightedGraph assemble(const PointSet& ps, const WeightVector& wv, const ModelParams& params,
                       std::uint64_t edge_seed, Engine engine, EdgeList&& edges) {
    std::sort(edges.begin(), edges.end());
    WeightedGraph g;
    g.points = ps;
    g.weights = wv;
    g.params = params;
    g.engine = engine;
    g.edge_seed = edge_seed;
    g.adjacency.assign(ps.size(), {});
    for (const auto& [i, j] : edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    g.edge_count = edges.size();
    return g;
}

void check_inputs(const PointSet& ps, const WeightVector& wv, const ModelParams& params) {
    params.validate();
    if (wv.values.size() != ps.size())
        throw std::invalid_argument("build_graph: points and weights are misaligned");
    if (params.dim != ps.geometry.dim)
        throw std::invalid_argument("build_graph: params.dim does not match the point set");
    if (ps.size() >= std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("build_graph: too many points");
}

int clamp_threads(int threads) {
    if (threads < 1) return 1;
    return std::min(threads, 64);
}

// Reordered copy of the points, grouped by cell, plus per-cell aggregates
// for the certified skip.
struct CellLayout {
    CellGrid grid;
    std::vector<double> xs[kMaxDim];
    std::vector<double> w;
    std::vector<std::uint32_t> orig;
    std::vector<std::size_t> start;  // cell c spans [start[c], start[c+1])
    std::vector<double> wmax;
    std::vector<std::array<double, 2>> bounds[kMaxDim];  // per-cell [lo,hi] per axis
};

// Cell side targeting a few dozen points per cell; the grid here is only a
// blocking device, correctness never depends on it.
double engine_cell_side(const BoxGeometry& g, double intensity) {
    const double target = 32.0;
    double side = std::pow(target / intensity, 1.0 / g.dim);
    const int max_per_axis = g.dim == 1 ? 4096 : g.dim == 2 ? 64 : 16;
    side = std::fmax(side, g.side / max_per_axis);
    return std::fmin(side, g.side);
}

CellLayout make_layout(const PointSet& ps) {
    CellLayout lay;
    lay.grid = build_cell_grid(ps, engine_cell_side(ps.geometry, ps.intensity));
    const std::size_t ncells = lay.grid.cell_count();
    const int dim = ps.geometry.dim;
    const std::size_t n = ps.size();
    for (int ax = 0; ax < dim; ++ax) lay.xs[ax].reserve(n);
    lay.w.reserve(n);
    lay.orig.reserve(n);
    lay.start.resize(ncells + 1, 0);
    lay.wmax.assign(ncells, 0.0);
    for (int ax = 0; ax < dim; ++ax)
        lay.bounds[ax].assign(ncells, {std::numeric_limits<double>::infinity(),
                                       -std::numeric_limits<double>::infinity()});
    return lay;
}

void fill_layout(CellLayout& lay, const PointSet& ps, const WeightVector& wv) {
    const int dim = ps.geometry.dim;
    for (std::size_t c = 0; c < lay.grid.cell_count(); ++c) {
        lay.start[c] = lay.orig.size();
        for (std::uint32_t i : lay.grid.cells[c]) {
            for (int ax = 0; ax < dim; ++ax) lay.xs[ax].push_back(ps.coords[ax][i]);
            lay.w.push_back(wv.values[i]);
            lay.orig.push_back(i);
            lay.wmax[c] = std::fmax(lay.wmax[c], wv.values[i]);
            for (int ax = 0; ax < dim; ++ax) {
                auto& b = lay.bounds[ax][c];
                b[0] = std::fmin(b[0], ps.coords[ax][i]);
                b[1] = std::fmax(b[1], ps.coords[ax][i]);
            }
        }
    }
    lay.start[lay.grid.cell_count()] = lay.orig.size();
}

// Squared minimum distance between the bounding boxes of two cells
// (minimum-image aware on the torus).
double min_box_r2(const CellLayout& lay, const BoxGeometry& g, std::size_t a, std::size_t b) {
    double r2 = 0.0;
    for (int ax = 0; ax < g.dim; ++ax) {
        const auto& ba = lay.bounds[ax][a];
        const auto& bb = lay.bounds[ax][b];
        double gap = 0.0;
        if (bb[0] > ba[1])
            gap = bb[0] - ba[1];
        else if (ba[0] > bb[1])
            gap = ba[0] - bb[1];
        if (g.topology == Topology::Torus) {
            const double wrapped = g.side - (std::fmax(ba[1], bb[1]) - std::fmin(ba[0], bb[0]));
            gap = std::fmin(gap, std::fmax(wrapped, 0.0));
        }
        r2 += gap * gap;
    }
    return r2;
}

}  // namespace

void ModelParams::validate() const {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("ModelParams: dim must be in [1,3]");
    if (!(alpha > 0.0)) throw std::invalid_argument("ModelParams: alpha must be positive");
    if (!(intensity > 0.0)) throw std::invalid_argument("ModelParams: intensity must be positive");
}

double edge_prob(double w_x, double w_y, double r, double alpha) {
    if (!(w_x > 0.0) || !(w_y > 0.0)) throw std::invalid_argument("edge_prob: weights must be positive");
    if (r < 0.0 || !(alpha > 0.0)) throw std::invalid_argument("edge_prob: need r >= 0, alpha > 0");
    if (r == 0.0) return 1.0;
    return -std::expm1(-(w_x * w_y) * std::pow(r, -alpha));
}

std::size_t degree(const WeightedGraph& g, std::size_t i) { return g.adjacency.at(i).size(); }

WeightedGraph build_graph_naive(const PointSet& ps, const WeightVector& wv,
                                const ModelParams& params, std::uint64_t edge_seed, int threads) {
    check_inputs(ps, wv, params);
    const std::size_t n = ps.size();
    const double neg_half_alpha = -0.5 * params.alpha;
    const double side = ps.geometry.topology == Topology::Torus ? ps.geometry.side : 0.0;
    const int dim = ps.geometry.dim;
    const PairRandom pr(edge_seed);
    const int nthreads = clamp_threads(threads);

    std::vector<EdgeList> partial(nthreads);
    auto worker = [&](int t) {
        EdgeList& out = partial[t];
        for (std::size_t i = t; i < n; i += nthreads) {
            const double wi = wv.values[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                double r2 = 0.0;
                for (int ax = 0; ax < dim; ++ax) {
                    double d = ps.coords[ax][i] - ps.coords[ax][j];
                    if (side > 0.0) d -= side * std::nearbyint(d / side);
                    r2 += d * d;
                }
                const double p = edge_prob_r2(wi, wv.values[j], r2, neg_half_alpha);
                if (pr.u01(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)) < p)
                    out.emplace_back(i, j);
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    EdgeList edges;
    for (auto& part : partial)
        edges.insert(edges.end(), part.begin(), part.end());
    return assemble(ps, wv, params, edge_seed, Engine::Naive, std::move(edges));
}

WeightedGraph build_graph_cell(const PointSet& ps, const WeightVector& wv,
                               const ModelParams& params, std::uint64_t edge_seed, int threads) {
    check_inputs(ps, wv, params);
    const double neg_half_alpha = -0.5 * params.alpha;
    const double side = ps.geometry.topology == Topology::Torus ? ps.geometry.side : 0.0;
    const int dim = ps.geometry.dim;
    const PairRandom pr(edge_seed);
    const int nthreads = clamp_threads(threads);
    const auto& kern = kernels::active_kernels();

    if (ps.size() == 0)
        return assemble(ps, wv, params, edge_seed, Engine::CellThinned, {});

    CellLayout lay = make_layout(ps);
    fill_layout(lay, ps, wv);
    const std::size_t ncells = lay.grid.cell_count();

    std::vector<double> octave_bounds(2048);
    kernels::fill_octave_bounds(params.alpha, octave_bounds.data());

    std::vector<EdgeList> partial(nthreads);
    auto sweep_cell_pair = [&](std::size_t ca, std::size_t cb, EdgeList& out,
                               std::vector<double>& r2, std::vector<double>& u,
                               std::vector<std::uint32_t>& surv) {
        const std::size_t a0 = lay.start[ca], a1 = lay.start[ca + 1];
        const std::size_t b0 = lay.start[cb], b1 = lay.start[cb + 1];
        if (a0 == a1 || b0 == b1) return;

        // Certified skip: only when the upper bound on p over the whole cell
        // pair is exactly zero (the doubling swallows every rounding in the
        // per-pair path).
        if (ca != cb) {
            const double rmin2 = min_box_r2(lay, ps.geometry, ca, cb);
            if (rmin2 > 0.0) {
                const double e_ub =
                    2.0 * (lay.wmax[ca] * lay.wmax[cb]) * std::pow(rmin2, neg_half_alpha);
                if (e_ub == 0.0) return;
            }
        }

        kernels::PointsSoA pts;
        for (int ax = 0; ax < dim; ++ax) pts.x[ax] = lay.xs[ax].data() + b0;
        const std::size_t bn = b1 - b0;
        r2.resize(bn);
        u.resize(bn);
        surv.resize(bn);

        for (std::size_t ia = a0; ia < a1; ++ia) {
            // within one cell only sweep the pairs after ia
            const std::size_t off = (ca == cb) ? (ia - b0 + 1) : 0;
            if (off >= bn) continue;
            const std::size_t cnt = bn - off;
            kernels::PointsSoA sub;
            for (int ax = 0; ax < dim; ++ax) sub.x[ax] = pts.x[ax] + off;
            const double origin[3] = {lay.xs[0][ia], dim > 1 ? lay.xs[1][ia] : 0.0,
                                      dim > 2 ? lay.xs[2][ia] : 0.0};
            kern.r2(origin, sub, dim, side, cnt, r2.data());
            kern.pair_u01(pr.seed, lay.orig[ia], lay.orig.data() + b0 + off, cnt, u.data());
            const double wi = lay.w[ia];
            const std::size_t ns = kern.screen(r2.data(), u.data(), wi, lay.w.data() + b0 + off,
                                               octave_bounds.data(), cnt, surv.data());
            for (std::size_t s = 0; s < ns; ++s) {
                const std::size_t k = surv[s];
                const double p = edge_prob_r2(wi, lay.w[b0 + off + k], r2[k], neg_half_alpha);
                if (u[k] < p) {
                    const std::uint32_t gi = lay.orig[ia];
                    const std::uint32_t gj = lay.orig[b0 + off + k];
                    out.emplace_back(std::min(gi, gj), std::max(gi, gj));
                }
            }
        }
    };

    auto worker = [&](int t) {
        EdgeList& out = partial[t];
        std::vector<double> r2, u;
        std::vector<std::uint32_t> surv;
        std::size_t pair_counter = 0;
        for (std::size_t ca = 0; ca < ncells; ++ca)
            for (std::size_t cb = ca; cb < ncells; ++cb, ++pair_counter)
                if (pair_counter % static_cast<std::size_t>(nthreads) ==
                    static_cast<std::size_t>(t))
                    sweep_cell_pair(ca, cb, out, r2, u, surv);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    EdgeList edges;
    for (auto& part : partial)
        edges.insert(edges.end(), part.begin(), part.end());
    return assemble(ps, wv, params, edge_seed, Engine::CellThinned, std::move(edges));
}

std::size_t origin_degree_simulated(const PointSet& ps, const WeightVector& wv, double alpha,
                                    double origin_weight, std::uint64_t edge_seed,
                                    double max_radius) {
    if (wv.values.size() != ps.size())
        throw std::invalid_argument("origin_degree_simulated: misaligned inputs");
    const double neg_half_alpha = -0.5 * alpha;
    const double side = ps.geometry.topology == Topology::Torus ? ps.geometry.side : 0.0;
    const int dim = ps.geometry.dim;
    const PairRandom pr(edge_seed);
    const auto origin_index = static_cast<std::uint32_t>(ps.size());
    const double max_r2 = max_radius * max_radius;

    std::size_t deg = 0;
    for (std::size_t j = 0; j < ps.size(); ++j) {
        double r2 = 0.0;
        for (int ax = 0; ax < dim; ++ax) {
            double d = -ps.coords[ax][j];
            if (side > 0.0) d -= side * std::nearbyint(d / side);
            r2 += d * d;
        }
        if (r2 > max_r2) continue;
        const double p = edge_prob_r2(origin_weight, wv.values[j], r2, neg_half_alpha);
        if (pr.u01(origin_index, static_cast<std::uint32_t>(j)) < p) ++deg;
    }
    return deg;
}

}  // namespace sfp
