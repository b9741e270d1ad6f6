// Exact edge sampling: pair (x, y) is linked with probability
//     p = 1 - exp(-W_x W_y / dist(x,y)^alpha),
// decided as u_{xy} < p with a pair-keyed uniform u_{xy}. Two engines build
// the same graph: a naive all-pairs oracle and a cell-blocked sweep that
// screens pairs with a certified upper bound before touching a
// transcendental. Their edge sets are bit-identical by construction.
#pragma once

#include <cstdint>
#include <vector>

#include "sfp/pointset.hpp"
#include "sfp/weights.hpp"

namespace sfp {

struct ModelParams {
    int dim = 2;
    double alpha = 4.0;
    WeightLaw law = WeightLaw::pareto(2.5);
    double intensity = 1.0;  // lambda; the edge-kernel prefactor is fixed to 1

    // Degree-tail exponent alpha (tau - 1) / d.
    double gamma() const { return alpha * (law.tau() - 1.0) / dim; }

    void validate() const;
};

enum class Engine { Naive, CellThinned };

struct WeightedGraph {
    PointSet points;
    WeightVector weights;
    ModelParams params;
    Engine engine = Engine::Naive;
    std::uint64_t edge_seed = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted neighbor lists
    std::size_t edge_count = 0;

    std::size_t size() const { return adjacency.size(); }
};

// Connection probability for two weights at distance r; p = 1 at r = 0 (a
// probability-zero event under the point process, defined for totality).
double edge_prob(double w_x, double w_y, double r, double alpha);

std::size_t degree(const WeightedGraph& g, std::size_t i);

WeightedGraph build_graph_naive(const PointSet& ps, const WeightVector& wv,
                                const ModelParams& params, std::uint64_t edge_seed,
                                int threads = 1);

WeightedGraph build_graph_cell(const PointSet& ps, const WeightVector& wv,
                               const ModelParams& params, std::uint64_t edge_seed,
                               int threads = 1);

// Degree of a vertex adjoined at the origin (Palm construction, index N),
// counting only neighbors within max_radius. Uses the same pair-keyed
// randomness as the engines, so it reproduces the adjoined vertex of a full
// palm graph build.
std::size_t origin_degree_simulated(const PointSet& ps, const WeightVector& wv, double alpha,
                                    double origin_weight, std::uint64_t edge_seed,
                                    double max_radius);

}  // namespace sfp
