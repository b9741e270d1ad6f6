// Versioned JSON-lines serialization for point sets and graphs. Floating
// point values are written in shortest round-trip form, so import recovers
// the exact binary values.
#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>

#include "sfp/graph.hpp"

namespace sfp::io {

// Header {dim, side, topology, intensity, seed, count}, then one line per
// point. When weights ride along, each point line carries the weight as its
// last element and the header records the law and weight seed.
void write_points(const PointSet& ps, const WeightVector* weights, const std::string& path);

struct PointsFile {
    PointSet points;
    std::optional<WeightVector> weights;
    std::optional<WeightLaw> law;
};
PointsFile read_points(const std::string& path);

// Header (params, seeds, engine) + one line per vertex (index, coords,
// weight) + one line per edge (i, j with i < j).
void write_graph(const WeightedGraph& g, const std::string& path);
WeightedGraph read_graph(const std::string& path);

nlohmann::json law_to_json(const WeightLaw& law);
WeightLaw law_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const ModelParams& params);
ModelParams params_from_json(const nlohmann::json& j);

nlohmann::json geometry_to_json(const BoxGeometry& g);
BoxGeometry geometry_from_json(const nlohmann::json& j);

// FNV-1a 64 content digest, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace sfp::io
