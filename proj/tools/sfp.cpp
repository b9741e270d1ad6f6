// sfp - experiment runner for continuum scale-free percolation.
//
// Subcommands: sample, graph, degrees, tail, cc, palm-cc, components,
// validate, report. Options can come from an INI config (--config) with
// identical key names; flags override the file. Every number in a report is
// reproducible from the recorded seeds.
//
// Exit codes: 0 ok, 1 invalid config/usage, 2 validation failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sfp/estimators.hpp"
#include "sfp/io.hpp"
#include "sfp/rng.hpp"
#include "sfp/theory.hpp"
#include "sfp/validation.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

struct Options {
    // geometry
    int dim = 2;
    double side = 64.0;
    std::string topology = "torus";
    // model
    double alpha = 4.0;
    double tau = 2.5;
    std::string law = "pareto";  // pareto | pareto_scaled | pareto_log_power
    double law_c = 1.0;
    double law_a = 1.0;
    double intensity = 1.0;
    // estimator options
    int hill_k = 0;  // 0: default floor(sqrt(N))
    double trunc_m = 16.0;
    double trunc_delta = 0.1;
    std::size_t replicas = 200;
    double cc_n = 0.0;  // 0: whole box
    std::string engine = "cell";
    // run control
    std::uint64_t master_seed = 1;
    std::string out_dir;
    int threads = 1;
    std::string format = "json";
    // validate
    std::string level = "fast";
    std::string inject_fault;  // test hook
    // components
    std::string bfs_pair;  // "i,j"
};

sfp::BoxGeometry geometry_of(const Options& o) {
    return sfp::BoxGeometry(o.dim, o.side,
                            o.topology == "free" ? sfp::Topology::FreeBoundary
                                                 : sfp::Topology::Torus);
}

sfp::WeightLaw law_of(const Options& o) {
    if (o.law == "pareto") return sfp::WeightLaw::pareto(o.tau);
    if (o.law == "pareto_scaled") return sfp::WeightLaw::pareto_scaled(o.tau, o.law_c);
    if (o.law == "pareto_log_power") return sfp::WeightLaw::pareto_log_power(o.tau, o.law_a);
    throw CLI::ValidationError("--law", "unknown weight law " + o.law);
}

sfp::ModelParams params_of(const Options& o) {
    return sfp::ModelParams{o.dim, o.alpha, law_of(o), o.intensity};
}

fs::path out_dir_of(const Options& o) {
    fs::path dir = o.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("SFP_OUT")) dir = env;
        else dir = ".";
    }
    fs::create_directories(dir);
    return dir;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ordered_json estimator_record(const std::string& operation, const ordered_json& params,
                              const ordered_json& seeds, const ordered_json& value,
                              double runtime_ms) {
    ordered_json rec;
    rec["operation"] = operation;
    rec["params"] = params;
    rec["seeds"] = seeds;
    rec["value"] = value;
    rec["runtime_ms"] = runtime_ms;
    return rec;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

void write_json(const fs::path& path, const ordered_json& j) {
    write_text(path, j.dump(2) + "\n");
}

std::string csv_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Shared pipeline pieces -----------------------------------------------------

struct Run {
    sfp::PointSet points;
    sfp::WeightVector weights;
    sfp::WeightedGraph graph;
};

Run build_run(const Options& o) {
    Run run;
    const auto geom = geometry_of(o);
    const auto params = params_of(o);
    run.points = sfp::sample_ppp(geom, o.intensity, sfp::rng::derive_seed(o.master_seed, "points"));
    run.weights = sfp::sample_weights(params.law, run.points.size(),
                                      sfp::rng::derive_seed(o.master_seed, "weights"));
    const std::uint64_t es = sfp::rng::derive_seed(o.master_seed, "edges");
    run.graph = o.engine == "naive"
                    ? sfp::build_graph_naive(run.points, run.weights, params, es, o.threads)
                    : sfp::build_graph_cell(run.points, run.weights, params, es, o.threads);
    return run;
}

void emit_degree_files(const sfp::WeightedGraph& g, const fs::path& dir,
                       ordered_json& artifacts) {
    const auto hist = sfp::estimators::degree_histogram(g);
    std::string csv = "degree,count\n";
    for (const auto& [deg, cnt] : hist)
        csv += std::to_string(deg) + "," + std::to_string(cnt) + "\n";
    const fs::path hist_path = dir / "degree_histogram.csv";
    write_text(hist_path, csv);
    artifacts["degree_histogram.csv"] = sfp::io::file_digest(hist_path.string());

    // complementary cdf: columns s, empirical P(D > s)
    std::string tail = "s,p_gt\n";
    const double n = static_cast<double>(g.size());
    std::size_t above = g.size();
    for (const auto& [deg, cnt] : hist) {
        above -= cnt;
        tail += std::to_string(deg) + "," + csv_double(static_cast<double>(above) / n) + "\n";
    }
    const fs::path tail_path = dir / "degree_tail.csv";
    write_text(tail_path, tail);
    artifacts["degree_tail.csv"] = sfp::io::file_digest(tail_path.string());
}

ordered_json regime_json(const sfp::ModelParams& params) {
    const auto rep = sfp::theory::classify_regime(params);
    const char* name = rep.regime == sfp::theory::Regime::InfiniteDegreeA ? "InfiniteDegree_A"
                       : rep.regime == sfp::theory::Regime::InfiniteDegreeB
                           ? "InfiniteDegree_B"
                           : "PowerLaw";
    return ordered_json{{"regime", name}, {"gamma", rep.gamma}};
}

int emit_validation(const std::vector<sfp::validation::CheckResult>& results,
                    const Options& o) {
    ordered_json rows = ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.runtime_s
                  << " s)\n      " << r.detail << "\n";
        rows.push_back(ordered_json{{"name", r.name},
                                    {"pass", r.pass},
                                    {"detail", r.detail},
                                    {"runtime_s", r.runtime_s}});
        all = all && r.pass;
    }
    const fs::path dir = out_dir_of(o);
    write_json(dir / "validation.json", rows);
    std::cout << (all ? "all checks passed" : "VALIDATION FAILED") << "\n";
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuum scale-free percolation simulator"};
    app.require_subcommand(1);
    Options o;

    app.set_config("--config", "", "INI config; flags override keys of the same name");
    app.add_option("--seed", o.master_seed, "master seed; all stage seeds derive from it");
    app.add_option("--out", o.out_dir, "output directory (default $SFP_OUT or .)");
    app.add_option("--threads", o.threads, "worker threads (affects speed only, never values)");
    app.add_option("--format", o.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto add_geometry = [&](CLI::App* cmd) {
        cmd->add_option("--dim", o.dim, "dimension (1..3)")->check(CLI::Range(1, 3));
        cmd->add_option("--side", o.side, "box side length");
        cmd->add_option("--topology", o.topology, "torus|free")
            ->check(CLI::IsMember({"torus", "free"}));
        cmd->add_option("--intensity", o.intensity, "Poisson intensity lambda");
    };
    auto add_model = [&](CLI::App* cmd) {
        add_geometry(cmd);
        cmd->add_option("--alpha", o.alpha, "edge kernel exponent");
        cmd->add_option("--tau", o.tau, "weight tail exponent (tau > 1)");
        cmd->add_option("--law", o.law, "pareto|pareto_scaled|pareto_log_power")
            ->check(CLI::IsMember({"pareto", "pareto_scaled", "pareto_log_power"}));
        cmd->add_option("--law-c", o.law_c, "scale of the constant slowly varying factor");
        cmd->add_option("--law-a", o.law_a, "exponent of the log-power slowly varying factor");
        cmd->add_option("--engine", o.engine, "cell|naive")
            ->check(CLI::IsMember({"cell", "naive"}));
    };

    auto* cmd_sample = app.add_subcommand("sample", "sample a Poisson point set");
    add_geometry(cmd_sample);
    auto* cmd_graph = app.add_subcommand("graph", "sample points, weights and edges");
    add_model(cmd_graph);
    auto* cmd_degrees = app.add_subcommand("degrees", "degree histogram and tail CSV");
    add_model(cmd_degrees);
    auto* cmd_tail = app.add_subcommand("tail", "Hill estimate of the degree-tail exponent");
    add_model(cmd_tail);
    cmd_tail->add_option("--k", o.hill_k, "order statistics used (default sqrt(N))");
    auto* cmd_cc = app.add_subcommand("cc", "averaged and truncated clustering coefficients");
    add_model(cmd_cc);
    cmd_cc->add_option("--m", o.trunc_m, "mesoscopic box side");
    cmd_cc->add_option("--delta", o.trunc_delta, "frame fraction in (0, 1/2)");
    cmd_cc->add_option("--cc-n", o.cc_n, "sub-box side for CC_n (default: whole box)");
    auto* cmd_palm = app.add_subcommand("palm-cc", "Palm Monte Carlo estimate of E_0[CC(0)]");
    add_model(cmd_palm);
    cmd_palm->add_option("--replicas", o.replicas, "Monte Carlo replicas");
    auto* cmd_comp = app.add_subcommand("components", "connected components summary");
    add_model(cmd_comp);
    cmd_comp->add_option("--bfs-pair", o.bfs_pair, "two vertex ids i,j for a hop distance query");
    auto* cmd_validate = app.add_subcommand("validate", "run the validation suite");
    cmd_validate->add_option("--level", o.level, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));
    cmd_validate->add_option("--inject-fault", o.inject_fault,
                             "test hook: corrupt an internal structure to prove checks fire")
        ->group("");  // hidden
    auto* cmd_report = app.add_subcommand("report", "full pipeline with a machine-readable report");
    add_model(cmd_report);
    cmd_report->add_option("--k", o.hill_k, "order statistics used (default sqrt(N))");
    cmd_report->add_option("--m", o.trunc_m, "mesoscopic box side");
    cmd_report->add_option("--delta", o.trunc_delta, "frame fraction in (0, 1/2)");
    cmd_report->add_option("--replicas", o.replicas, "Palm Monte Carlo replicas");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const fs::path dir = out_dir_of(o);

        if (cmd_sample->parsed()) {
            const auto t0 = Clock::now();
            const auto ps = sfp::sample_ppp(geometry_of(o), o.intensity,
                                            sfp::rng::derive_seed(o.master_seed, "points"));
            const fs::path path = dir / "points.jsonl";
            sfp::io::write_points(ps, nullptr, path.string());
            ordered_json rep;
            rep["config"] = {{"dim", o.dim}, {"side", o.side}, {"topology", o.topology},
                             {"intensity", o.intensity}, {"master_seed", o.master_seed}};
            rep["records"] = {estimator_record(
                "sample",
                {{"dim", o.dim}, {"side", o.side}, {"intensity", o.intensity}},
                {{"points", sfp::rng::derive_seed(o.master_seed, "points")}},
                {{"count", ps.size()}}, ms_since(t0))};
            rep["artifacts"] = {{"points.jsonl", sfp::io::file_digest(path.string())}};
            write_json(dir / "report.json", rep);
            std::cout << "wrote " << path.string() << " (" << ps.size() << " points)\n";
            return 0;
        }

        if (cmd_validate->parsed()) {
            if (!o.inject_fault.empty()) {
                // negative-path hook: corrupt adjacency and expect the
                // invariant check to fail
                auto run = build_run(o);
                if (o.inject_fault == "adjacency" && run.graph.size() >= 2)
                    run.graph.adjacency[0].push_back(1);  // one-sided edge
                const auto viol = sfp::validation::check_graph_invariants(run.graph);
                std::cout << (viol.empty() ? "no violation detected" : "violation: " + viol)
                          << "\n";
                return viol.empty() ? 0 : 2;
            }
            const auto results = o.level == "full"
                                     ? sfp::validation::run_acceptance(o.threads)
                                     : sfp::validation::run_fast(o.threads);
            return emit_validation(results, o);
        }

        // remaining subcommands share the sampled pipeline
        const auto params = params_of(o);
        ordered_json config;
        config["model"] = sfp::io::params_to_json(params);
        config["geometry"] = sfp::io::geometry_to_json(geometry_of(o));
        config["master_seed"] = o.master_seed;
        config["threads"] = o.threads;
        config["engine"] = o.engine;
        ordered_json seeds{{"points", sfp::rng::derive_seed(o.master_seed, "points")},
                           {"weights", sfp::rng::derive_seed(o.master_seed, "weights")},
                           {"edges", sfp::rng::derive_seed(o.master_seed, "edges")}};

        ordered_json rep;
        rep["config"] = config;
        rep["regime"] = regime_json(params);
        ordered_json records = ordered_json::array();
        ordered_json artifacts;

        const auto t_build = Clock::now();
        Run run = build_run(o);
        const double build_ms = ms_since(t_build);
        records.push_back(estimator_record(
            "graph", {{"engine", o.engine}}, seeds,
            {{"vertices", run.graph.size()}, {"edges", run.graph.edge_count}}, build_ms));

        const bool want_graph_file = cmd_graph->parsed() || cmd_report->parsed();
        if (want_graph_file) {
            const fs::path gpath = dir / "graph.jsonl";
            sfp::io::write_graph(run.graph, gpath.string());
            artifacts["graph.jsonl"] = sfp::io::file_digest(gpath.string());
        }

        if (cmd_degrees->parsed() || cmd_report->parsed()) {
            const auto t0 = Clock::now();
            emit_degree_files(run.graph, dir, artifacts);
            records.push_back(estimator_record("degree_histogram", {}, seeds,
                                               {{"vertices", run.graph.size()}}, ms_since(t0)));
        }

        if (cmd_tail->parsed() || cmd_report->parsed()) {
            const auto t0 = Clock::now();
            const auto regime = sfp::theory::classify_regime(params);
            const int k = o.hill_k > 0
                              ? o.hill_k
                              : static_cast<int>(std::sqrt(static_cast<double>(run.graph.size())));
            ordered_json value;
            if (regime.regime != sfp::theory::Regime::PowerLaw)
                value["warning"] = "infinite-degree regime: tail exponent is not defined";
            try {
                const auto fit = sfp::estimators::hill_gamma(
                    sfp::estimators::degrees_of(run.graph), k);
                value["gamma_hat"] = fit.gamma_hat;
                value["k"] = fit.k;
                value["stderr"] = fit.stderr_;
                value["sample_size"] = fit.sample_size;
                value["gamma_theory"] = params.gamma();
            } catch (const sfp::estimators::estimation_error& e) {
                value["warning"] = e.what();
            }
            records.push_back(estimator_record("hill_gamma", {{"k", k}}, seeds, value,
                                               ms_since(t0)));
        }

        if (cmd_cc->parsed() || cmd_report->parsed()) {
            const auto t0 = Clock::now();
            const double ccn_side = o.cc_n > 0.0 ? o.cc_n : o.side;
            sfp::estimators::CCReport cc;
            cc.n = ccn_side;
            cc.cc_n = sfp::estimators::averaged_cc(run.graph, ccn_side);
            ordered_json value{{"cc_n", cc.cc_n}, {"n", cc.n}};
            if (o.trunc_m > 0.0 && o.trunc_m < o.side) {
                cc.m = o.trunc_m;
                cc.delta = o.trunc_delta;
                cc.cc_truncated = sfp::estimators::truncated_cc(
                    run.graph, {o.trunc_m, o.trunc_delta});
                value["cc_truncated"] = cc.cc_truncated;
                value["m"] = cc.m;
                value["delta"] = cc.delta;
            }
            records.push_back(estimator_record("cc", {{"m", o.trunc_m}, {"delta", o.trunc_delta}},
                                               seeds, value, ms_since(t0)));
        }

        if (cmd_palm->parsed() || cmd_report->parsed()) {
            const auto t0 = Clock::now();
            const auto palm = sfp::estimators::palm_cc_estimate(
                params, geometry_of(o), o.replicas,
                sfp::rng::derive_seed(o.master_seed, "palm-cc"), 0.99, o.threads);
            records.push_back(estimator_record(
                "palm_cc", {{"replicas", o.replicas}},
                {{"palm", sfp::rng::derive_seed(o.master_seed, "palm-cc")}},
                {{"estimate", palm.estimate},
                 {"stderr", palm.stderr_},
                 {"ci", {palm.ci_lo, palm.ci_hi}},
                 {"level", palm.level}},
                ms_since(t0)));
        }

        if (cmd_comp->parsed() || cmd_report->parsed()) {
            const auto t0 = Clock::now();
            const auto labels = sfp::estimators::connected_components(run.graph);
            std::map<std::uint32_t, std::size_t> sizes;
            for (auto l : labels) ++sizes[l];
            std::size_t largest = 0;
            for (const auto& [l, n] : sizes) largest = std::max(largest, n);
            ordered_json value{{"components", sizes.size()}, {"largest", largest}};
            if (!o.bfs_pair.empty()) {
                const auto comma = o.bfs_pair.find(',');
                if (comma == std::string::npos)
                    throw CLI::ValidationError("--bfs-pair", "expected i,j");
                const std::size_t i = std::stoull(o.bfs_pair.substr(0, comma));
                const std::size_t j = std::stoull(o.bfs_pair.substr(comma + 1));
                const auto dist = sfp::estimators::bfs_distance(run.graph, i, j);
                value["bfs"] = dist ? ordered_json(*dist) : ordered_json("unreachable");
            }
            records.push_back(estimator_record("components", {}, seeds, value, ms_since(t0)));
        }

        rep["records"] = records;
        rep["artifacts"] = artifacts;
        write_json(dir / "report.json", rep);
        if (o.format == "csv") {
            std::string csv = "operation,key,value\n";
            for (const auto& rec : records)
                for (const auto& [key, val] : rec.at("value").items())
                    csv += rec.at("operation").get<std::string>() + "," + key + "," + val.dump() +
                           "\n";
            write_text(dir / "report.csv", csv);
        }
        std::cout << "wrote " << (dir / "report.json").string() << "\n";
        return 0;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
