// The acceptance suite: each check pins a statistical or exactness property
// of the library at desk scale, with tolerances fixed in code. The CLI
// `validate` subcommand and the acceptance test binary both drive these.
#pragma once

#include <string>
#include <vector>

#include "sfp/graph.hpp"

namespace sfp::validation {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double runtime_s = 0.0;
};

// The full acceptance suite (nine criteria).
std::vector<CheckResult> run_acceptance(int threads);

// Quick confidence pass (< 60 s): exactness checks plus down-scaled
// statistical smoke tests.
std::vector<CheckResult> run_fast(int threads);

// Structural invariants of a built graph: symmetric adjacency, sorted
// neighbor lists, no self-loops, no duplicates. Returns an empty string or
// a description of the first violation.
std::string check_graph_invariants(const WeightedGraph& g);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sfp::validation
