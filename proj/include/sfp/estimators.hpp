// Quenched and annealed statistics on sampled graphs: degree tails,
// conditional degrees, clustering coefficients (plain, truncated, Palm),
// components and hop distances, and the Slivnyak-Mecke counting check.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sfp/graph.hpp"

namespace sfp::estimators {

struct estimation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hill fit of the degree-tail exponent from the k largest order statistics.
struct TailFit {
    double gamma_hat = 0.0;
    int k = 0;
    double stderr_ = 0.0;  // gamma_hat / sqrt(k)
    std::size_t sample_size = 0;
};

struct TruncationParams {
    double m = 16.0;     // mesoscopic box side
    double delta = 0.1;  // frame fraction, in (0, 1/2)
};

struct PalmEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double level = 0.99;
    std::size_t replicas = 0;
};

// Aggregate clustering record as it appears in reports.
struct CCReport {
    double cc_n = 0.0;
    double cc_truncated = 0.0;
    double m = 0.0;
    double delta = 0.0;
    PalmEstimate palm;
    double n = 0.0;
};

std::map<std::size_t, std::size_t> degree_histogram(const WeightedGraph& g);

std::vector<std::size_t> degrees_of(const WeightedGraph& g);

TailFit hill_gamma(const std::vector<std::size_t>& degrees, int k);

// Z_w for a fixed configuration: sum over points of psi(w dist(origin,x)^-alpha).
double quenched_conditional_degree(const PointSet& ps, const WeightLaw& law, double alpha,
                                   double w, const Point& origin);

double local_cc(const WeightedGraph& g, std::size_t i);

// Mean local clustering coefficient over vertices inside the sub-box B_n;
// 0 when the sub-box is empty.
double averaged_cc(const WeightedGraph& g, double n);

// (m, delta)-truncated clustering coefficient: vertices in the delta-frame
// of their m-box or with an edge leaving their m-box contribute 0, and the
// sum is normalized by lambda n^d (not by the vertex count). The m-box grid
// is anchored with one box centered at the origin.
double truncated_cc(const WeightedGraph& g, const TruncationParams& trunc);

// Monte Carlo estimate of the Palm mean E_0[CC(0)]: each replica adjoins an
// origin vertex with an independent weight to a fresh PPP sample and records
// its local clustering coefficient.
PalmEstimate palm_cc_estimate(const ModelParams& params, const BoxGeometry& geometry,
                              std::size_t replicas, std::uint64_t seed, double ci_level = 0.99,
                              int threads = 1);

// Component labels; the label of a component is its minimum vertex index.
std::vector<std::uint32_t> connected_components(const WeightedGraph& g);

// Hop distance, or nullopt when unreachable.
std::optional<std::size_t> bfs_distance(const WeightedGraph& g, std::size_t i, std::size_t j);

struct SlivnyakCheck {
    double empirical = 0.0;
    double analytic = 0.0;
    double stderr_ = 0.0;
    std::size_t seeds = 0;
};

// Mean number of points with no other point within distance r, versus the
// closed form lambda n^d exp(-lambda v_d r^d).
SlivnyakCheck slivnyak_mecke_check(const BoxGeometry& geometry, double lambda, double r,
                                   std::size_t seeds, std::uint64_t master_seed);

}  // namespace sfp::estimators
