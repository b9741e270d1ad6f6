#include "sfp/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sfp::io {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

constexpr int kPointsVersion = 1;
constexpr int kGraphVersion = 1;

std::string topology_name(Topology t) {
    return t == Topology::Torus ? "torus" : "free";
}

Topology topology_from(const std::string& s) {
    if (s == "torus") return Topology::Torus;
    if (s == "free") return Topology::FreeBoundary;
    throw std::invalid_argument("unknown topology: " + s);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

json law_to_json(const WeightLaw& law) {
    json j;
    switch (law.family()) {
        case WeightLaw::Family::Pareto:
            j["family"] = "pareto";
            j["tau"] = law.tau();
            break;
        case WeightLaw::Family::ParetoScaled:
            j["family"] = "pareto_scaled";
            j["tau"] = law.tau();
            j["c"] = law.scale_c();
            break;
        case WeightLaw::Family::ParetoLogPower:
            j["family"] = "pareto_log_power";
            j["tau"] = law.tau();
            j["a"] = law.log_exponent();
            break;
        case WeightLaw::Family::Degenerate:
            j["family"] = "degenerate";
            j["w"] = law.support_min();
            break;
    }
    return j;
}

WeightLaw law_from_json(const json& j) {
    const std::string family = j.at("family");
    if (family == "pareto") return WeightLaw::pareto(j.at("tau"));
    if (family == "pareto_scaled") return WeightLaw::pareto_scaled(j.at("tau"), j.at("c"));
    if (family == "pareto_log_power")
        return WeightLaw::pareto_log_power(j.at("tau"), j.at("a"));
    if (family == "degenerate") return WeightLaw::degenerate(j.at("w"));
    throw std::invalid_argument("unknown weight law family: " + family);
}

json params_to_json(const ModelParams& params) {
    return json{{"dim", params.dim},
                {"alpha", params.alpha},
                {"intensity", params.intensity},
                {"law", law_to_json(params.law)}};
}

ModelParams params_from_json(const json& j) {
    ModelParams p;
    p.dim = j.at("dim");
    p.alpha = j.at("alpha");
    p.intensity = j.at("intensity");
    p.law = law_from_json(j.at("law"));
    p.validate();
    return p;
}

json geometry_to_json(const BoxGeometry& g) {
    return json{{"dim", g.dim}, {"side", g.side}, {"topology", topology_name(g.topology)}};
}

BoxGeometry geometry_from_json(const json& j) {
    return BoxGeometry(j.at("dim"), j.at("side"), topology_from(j.at("topology")));
}

void write_points(const PointSet& ps, const WeightVector* weights, const std::string& path) {
    if (weights && weights->values.size() != ps.size())
        throw std::invalid_argument("write_points: weights misaligned");
    auto out = open_out(path);
    ordered header;
    header["format"] = "sfp-points";
    header["version"] = kPointsVersion;
    header["dim"] = ps.geometry.dim;
    header["side"] = ps.geometry.side;
    header["topology"] = topology_name(ps.geometry.topology);
    header["intensity"] = ps.intensity;
    header["seed"] = ps.seed;
    header["count"] = ps.size();
    if (weights) header["weight_seed"] = weights->seed;
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < ps.size(); ++i) {
        json line = json::array();
        for (int ax = 0; ax < ps.geometry.dim; ++ax) line.push_back(ps.coords[ax][i]);
        if (weights) line.push_back(weights->values[i]);
        out << line.dump() << '\n';
    }
}

PointsFile read_points(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_points: empty file");
    const json header = json::parse(line);
    if (header.at("format") != "sfp-points")
        throw std::runtime_error("read_points: not a points file");

    PointsFile pf;
    pf.points.geometry =
        BoxGeometry(header.at("dim"), header.at("side"), topology_from(header.at("topology")));
    pf.points.intensity = header.at("intensity");
    pf.points.seed = header.at("seed");
    const std::size_t count = header.at("count");
    const bool has_weights = header.contains("weight_seed");
    if (has_weights) {
        pf.weights.emplace();
        pf.weights->seed = header.at("weight_seed");
    }
    const int dim = pf.points.geometry.dim;
    for (int ax = 0; ax < dim; ++ax) pf.points.coords[ax].reserve(count);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json rec = json::parse(line);
        for (int ax = 0; ax < dim; ++ax) pf.points.coords[ax].push_back(rec.at(ax));
        if (has_weights) pf.weights->values.push_back(rec.at(dim));
    }
    if (pf.points.size() != count) throw std::runtime_error("read_points: truncated file");
    return pf;
}

void write_graph(const WeightedGraph& g, const std::string& path) {
    auto out = open_out(path);
    ordered header;
    header["format"] = "sfp-graph";
    header["version"] = kGraphVersion;
    header["model"] = params_to_json(g.params);
    header["geometry"] = geometry_to_json(g.points.geometry);
    header["seeds"] = {{"points", g.points.seed},
                       {"weights", g.weights.seed},
                       {"edges", g.edge_seed}};
    header["engine"] = g.engine == Engine::Naive ? "naive" : "cell";
    header["counts"] = {{"vertices", g.size()}, {"edges", g.edge_count}};
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < g.size(); ++i) {
        json x = json::array();
        for (int ax = 0; ax < g.points.geometry.dim; ++ax) x.push_back(g.points.coords[ax][i]);
        out << json{{"v", i}, {"x", x}, {"w", g.weights.values[i]}}.dump() << '\n';
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::uint32_t j : g.adjacency[i])
            if (j > i) out << json{{"e", {i, j}}}.dump() << '\n';
}

WeightedGraph read_graph(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_graph: empty file");
    const json header = json::parse(line);
    if (header.at("format") != "sfp-graph") throw std::runtime_error("read_graph: not a graph file");

    WeightedGraph g;
    g.params = params_from_json(header.at("model"));
    g.points.geometry = geometry_from_json(header.at("geometry"));
    g.points.seed = header.at("seeds").at("points");
    g.points.intensity = g.params.intensity;
    g.weights.seed = header.at("seeds").at("weights");
    g.edge_seed = header.at("seeds").at("edges");
    g.engine = header.at("engine") == "naive" ? Engine::Naive : Engine::CellThinned;
    const std::size_t vertices = header.at("counts").at("vertices");
    const std::size_t edges = header.at("counts").at("edges");

    g.adjacency.assign(vertices, {});
    const int dim = g.points.geometry.dim;
    for (int ax = 0; ax < dim; ++ax) g.points.coords[ax].resize(vertices);
    g.weights.values.resize(vertices);

    std::size_t seen_edges = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json rec = json::parse(line);
        if (rec.contains("v")) {
            const std::size_t i = rec.at("v");
            if (i >= vertices) throw std::runtime_error("read_graph: vertex index out of range");
            for (int ax = 0; ax < dim; ++ax) g.points.coords[ax][i] = rec.at("x").at(ax);
            g.weights.values[i] = rec.at("w");
        } else {
            const std::size_t i = rec.at("e").at(0), j = rec.at("e").at(1);
            if (i >= j || j >= vertices) throw std::runtime_error("read_graph: bad edge");
            g.adjacency[i].push_back(static_cast<std::uint32_t>(j));
            g.adjacency[j].push_back(static_cast<std::uint32_t>(i));
            ++seen_edges;
        }
    }
    if (seen_edges != edges) throw std::runtime_error("read_graph: edge count mismatch");
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    g.edge_count = edges;
    return g;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001B3ULL;
        }
        if (!in) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return std::string(hex);
}

}  // namespace sfp::io
