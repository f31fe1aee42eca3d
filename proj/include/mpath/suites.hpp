#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mpath/digraph.hpp"

namespace mpath {

struct SuiteOptions {
    int max = -1;             // suite-specific size bound, -1 for the default
    int count = -1;           // random instances, -1 for the default
    std::uint64_t seed = 20240521;
};

struct SuiteResult {
    std::vector<std::string> lines;  // one per check, prefixed "ok" or "FAIL"
    bool passed = true;
    void check(bool ok, const std::string& what);
};

const std::vector<std::string>& suite_names();

// Throws BadParameters for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

// Simple digraph with at most max_vertices vertices (at least 1) and max_edges edges.
Digraph random_digraph(std::mt19937_64& rng, int max_vertices, int max_edges);

}  // namespace mpath
