#include "sfp/estimators.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <thread>

#include "sfp/rng.hpp"
#include "sfp/summation.hpp"
#include "sfp/theory.hpp"
#include "sfp/union_find.hpp"

namespace sfp::estimators {
namespace {

// Triangles at i: for every neighbor j, common neighbors k of i and j with
// k > j close one triangle, counted once.
std::size_t triangles_at(const WeightedGraph& g, std::size_t i) {
    const auto& ni = g.adjacency[i];
    std::size_t count = 0;
    for (std::uint32_t j : ni) {
        const auto& nj = g.adjacency[j];
        auto it_i = std::upper_bound(ni.begin(), ni.end(), j);
        auto it_j = std::upper_bound(nj.begin(), nj.end(), j);
        while (it_i != ni.end() && it_j != nj.end()) {
            if (*it_i < *it_j)
                ++it_i;
            else if (*it_j < *it_i)
                ++it_j;
            else {
                ++count;
                ++it_i;
                ++it_j;
            }
        }
    }
    return count;
}

bool in_subbox(const WeightedGraph& g, std::size_t i, double half) {
    for (int ax = 0; ax < g.points.geometry.dim; ++ax)
        if (std::fabs(g.points.coords[ax][i]) > half) return false;
    return true;
}

}  // namespace

std::map<std::size_t, std::size_t> degree_histogram(const WeightedGraph& g) {
    std::map<std::size_t, std::size_t> hist;
    for (const auto& adj : g.adjacency) ++hist[adj.size()];
    return hist;
}

std::vector<std::size_t> degrees_of(const WeightedGraph& g) {
    std::vector<std::size_t> deg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) deg[i] = g.adjacency[i].size();
    return deg;
}

TailFit hill_gamma(const std::vector<std::size_t>& degrees, int k) {
    if (k < 10) throw estimation_error("hill_gamma: k must be at least 10");
    std::vector<std::size_t> sorted = degrees;
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted.size() <= static_cast<std::size_t>(k) || sorted[k] == 0)
        throw estimation_error("hill_gamma: not enough positive degrees for this k");
    const double pivot = static_cast<double>(sorted[k]);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += std::log(static_cast<double>(sorted[i]) / pivot);
    if (sum <= 0.0) throw estimation_error("hill_gamma: degenerate tail (all order statistics equal)");
    TailFit fit;
    fit.gamma_hat = static_cast<double>(k) / sum;
    fit.k = k;
    fit.stderr_ = fit.gamma_hat / std::sqrt(static_cast<double>(k));
    fit.sample_size = degrees.size();
    return fit;
}

double quenched_conditional_degree(const PointSet& ps, const WeightLaw& law, double alpha,
                                   double w, const Point& origin) {
    if (!(w > 0.0)) throw std::invalid_argument("quenched_conditional_degree: w > 0");
    std::vector<double> terms(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double r = distance(ps.geometry, origin, ps.point(i));
        terms[i] = law.psi(w * std::pow(r, -alpha));
    }
    return pairwise_sum(terms);
}

double local_cc(const WeightedGraph& g, std::size_t i) {
    const double deg = static_cast<double>(g.adjacency.at(i).size());
    if (deg < 2.0) return 0.0;
    const double tri = static_cast<double>(triangles_at(g, i));
    return 2.0 * tri / (deg * (deg - 1.0));
}

double averaged_cc(const WeightedGraph& g, double n) {
    if (n > g.points.geometry.side * (1.0 + 1e-12))
        throw std::invalid_argument("averaged_cc: n exceeds the box side");
    const double half = 0.5 * n;
    std::vector<double> vals;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (in_subbox(g, i, half)) vals.push_back(local_cc(g, i));
    if (vals.empty()) return 0.0;
    return pairwise_sum(vals) / static_cast<double>(vals.size());
}

double truncated_cc(const WeightedGraph& g, const TruncationParams& trunc) {
    const auto& geom = g.points.geometry;
    const double n = geom.side;
    const double m = trunc.m;
    const double delta = trunc.delta;
    if (!(m > 0.0) || m >= n) throw std::invalid_argument("truncated_cc: need 0 < m < n");
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("truncated_cc: delta must be in (0, 1/2)");

    const int dim = geom.dim;
    const double interior_half = 0.5 * m - delta * m;

    auto box_center = [&](std::size_t i, double* center) {
        for (int ax = 0; ax < dim; ++ax)
            center[ax] = m * std::nearbyint(g.points.coords[ax][i] / m);
    };
    auto same_box = [&](const double* ca, const double* cb) {
        for (int ax = 0; ax < dim; ++ax)
            if (ca[ax] != cb[ax]) return false;
        return true;
    };

    std::vector<double> vals;
    vals.reserve(g.size());
    double ci[kMaxDim], cj[kMaxDim];
    for (std::size_t i = 0; i < g.size(); ++i) {
        box_center(i, ci);
        bool interior = true;
        for (int ax = 0; ax < dim && interior; ++ax)
            if (std::fabs(g.points.coords[ax][i] - ci[ax]) >= interior_half) interior = false;
        if (!interior) continue;
        bool leaves = false;
        for (std::uint32_t j : g.adjacency[i]) {
            box_center(j, cj);
            if (!same_box(ci, cj)) {
                leaves = true;
                break;
            }
        }
        if (leaves) continue;
        vals.push_back(local_cc(g, i));
    }
    double norm = g.params.intensity;
    for (int ax = 0; ax < dim; ++ax) norm *= n;
    return vals.empty() ? 0.0 : pairwise_sum(vals) / norm;
}

PalmEstimate palm_cc_estimate(const ModelParams& params, const BoxGeometry& geometry,
                              std::size_t replicas, std::uint64_t seed, double ci_level,
                              int threads) {
    if (replicas < 2) throw std::invalid_argument("palm_cc_estimate: need at least 2 replicas");
    if (!(ci_level > 0.0 && ci_level < 1.0))
        throw std::invalid_argument("palm_cc_estimate: ci_level in (0,1)");

    std::vector<double> cc(replicas);
    auto run_replica = [&](std::size_t r) {
        const std::uint64_t rs = rng::derive_seed(seed, "palm", r);
        PointSet ps = sample_ppp(geometry, params.intensity, rng::derive_seed(rs, "points"));
        const std::size_t origin_index = ps.size();
        for (int ax = 0; ax < geometry.dim; ++ax) ps.coords[ax].push_back(0.0);
        // i.i.d. weights for the N points plus an independent one for the origin
        WeightVector wv =
            sample_weights(params.law, origin_index + 1, rng::derive_seed(rs, "weights"));
        const WeightedGraph g =
            build_graph_cell(ps, wv, params, rng::derive_seed(rs, "edges"), 1);
        cc[r] = local_cc(g, origin_index);
    };

    const int nthreads = std::max(1, std::min<int>(threads, 64));
    if (nthreads == 1) {
        for (std::size_t r = 0; r < replicas; ++r) run_replica(r);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t r = t; r < replicas; r += nthreads) run_replica(r);
            });
        for (auto& th : pool) th.join();
    }

    PalmEstimate est;
    est.replicas = replicas;
    est.level = ci_level;
    est.estimate = pairwise_sum(cc) / static_cast<double>(replicas);
    std::vector<double> sq(replicas);
    for (std::size_t r = 0; r < replicas; ++r) {
        const double d = cc[r] - est.estimate;
        sq[r] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(replicas - 1);
    est.stderr_ = std::sqrt(var / static_cast<double>(replicas));
    const double z = boost::math::quantile(boost::math::normal_distribution<double>(),
                                           0.5 * (1.0 + ci_level));
    est.ci_lo = est.estimate - z * est.stderr_;
    est.ci_hi = est.estimate + z * est.stderr_;
    return est;
}

std::vector<std::uint32_t> connected_components(const WeightedGraph& g) {
    UnionFind uf(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::uint32_t j : g.adjacency[i])
            if (j > i) uf.unite(static_cast<std::uint32_t>(i), j);
    // stable labels: minimum vertex index per component
    std::vector<std::uint32_t> label(g.size());
    std::vector<std::uint32_t> min_of_root(g.size(), std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::uint32_t r = uf.find(static_cast<std::uint32_t>(i));
        min_of_root[r] = std::min(min_of_root[r], static_cast<std::uint32_t>(i));
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        label[i] = min_of_root[uf.find(static_cast<std::uint32_t>(i))];
    return label;
}

std::optional<std::size_t> bfs_distance(const WeightedGraph& g, std::size_t i, std::size_t j) {
    if (i >= g.size() || j >= g.size()) throw std::invalid_argument("bfs_distance: bad vertex");
    if (i == j) return 0;
    std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
    std::deque<std::uint32_t> queue;
    dist[i] = 0;
    queue.push_back(static_cast<std::uint32_t>(i));
    while (!queue.empty()) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t w : g.adjacency[v]) {
            if (dist[w] != std::numeric_limits<std::size_t>::max()) continue;
            dist[w] = dist[v] + 1;
            if (w == j) return dist[w];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

SlivnyakCheck slivnyak_mecke_check(const BoxGeometry& geometry, double lambda, double r,
                                   std::size_t seeds, std::uint64_t master_seed) {
    if (geometry.topology == Topology::Torus && !(r < geometry.half_side()))
        throw std::invalid_argument("slivnyak_mecke_check: need r < side/2 on the torus");
    if (seeds < 2) throw std::invalid_argument("slivnyak_mecke_check: need at least 2 seeds");

    std::vector<double> counts(seeds);
    for (std::size_t s = 0; s < seeds; ++s) {
        const PointSet ps =
            sample_ppp(geometry, lambda, rng::derive_seed(master_seed, "slivnyak", s));
        const double cs = std::fmax(r, geometry.side / 64.0);
        const CellGrid grid = build_cell_grid(ps, std::fmin(cs, geometry.side));
        const int layers = static_cast<int>(std::ceil(r / grid.cell_side));
        const double r2max = r * r;

        std::size_t isolated = 0;
        const int dim = geometry.dim;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const Point pi = ps.point(i);
            int ci[kMaxDim] = {0, 0, 0};
            for (int ax = 0; ax < dim; ++ax)
                ci[ax] = grid.axis_cell(ax, pi[ax], geometry.half_side());
            bool alone = true;
            // visit neighbor cells (deduplicated after torus wrap)
            std::vector<std::size_t> cells;
            int off[kMaxDim] = {0, 0, 0};
            const int span = 2 * layers + 1;
            int total = 1;
            for (int ax = 0; ax < dim; ++ax) total *= span;
            for (int t = 0; t < total; ++t) {
                int rem = t;
                int c[kMaxDim] = {0, 0, 0};
                bool valid = true;
                for (int ax = 0; ax < dim; ++ax) {
                    off[ax] = (rem % span) - layers;
                    rem /= span;
                    int cc = ci[ax] + off[ax];
                    if (geometry.topology == Topology::Torus) {
                        cc = ((cc % grid.per_axis[ax]) + grid.per_axis[ax]) % grid.per_axis[ax];
                    } else if (cc < 0 || cc >= grid.per_axis[ax]) {
                        valid = false;
                        break;
                    }
                    c[ax] = cc;
                }
                if (valid) cells.push_back(grid.linear_index(c));
            }
            std::sort(cells.begin(), cells.end());
            cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
            for (std::size_t cell : cells) {
                for (std::uint32_t j : grid.cells[cell]) {
                    if (j == i) continue;
                    if (squared_distance(geometry, pi, ps.point(j)) <= r2max) {
                        alone = false;
                        break;
                    }
                }
                if (!alone) break;
            }
            if (alone) ++isolated;
        }
        counts[s] = static_cast<double>(isolated);
    }

    SlivnyakCheck check;
    check.seeds = seeds;
    check.empirical = pairwise_sum(counts) / static_cast<double>(seeds);
    std::vector<double> sq(seeds);
    for (std::size_t s = 0; s < seeds; ++s) {
        const double d = counts[s] - check.empirical;
        sq[s] = d * d;
    }
    check.stderr_ = std::sqrt(pairwise_sum(sq) / static_cast<double>(seeds - 1) /
                              static_cast<double>(seeds));
    const double vd = theory::unit_ball_volume(geometry.dim);
    double nd = 1.0;
    for (int ax = 0; ax < geometry.dim; ++ax) nd *= geometry.side;
    check.analytic = lambda * nd * std::exp(-lambda * vd * std::pow(r, geometry.dim));
    return check;
}

}  // namespace sfp::estimators
