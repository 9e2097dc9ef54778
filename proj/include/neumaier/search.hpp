#pragma once

#include "neumaier/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace neumaier {

enum class SearchMode { Exhaustive, FirstFound };

struct SearchSpec {
    NeumaierParams params;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t budget_nodes = 1'000'000'000;
    double budget_seconds = 3600.0;
    /// Keep only graphs that are not strongly regular.
    bool strict = true;
    /// Lexicographic row ordering inside classes of interchangeable vertices.
    bool symmetry_breaking = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t designs = 0;
    std::uint64_t completions = 0;
    std::map<std::string, std::uint64_t> prunes;
    double seconds = 0.0;
};

struct SearchResult {
    SearchSpec spec;
    /// Canonical graphs, pairwise non-isomorphic, sorted by certificate.
    std::vector<Graph> representatives;
    /// True iff the whole space was explored within budget.
    bool exhaustive = false;
    SearchStats stats;
};

/// Graphs in NG(v,k,lambda;m,s) up to isomorphism, found by fixing the
/// seed clique {0..s-1}, choosing how the remaining vertices attach to it and
/// completing the adjacency among them row by row. Throws
/// std::invalid_argument for parameters failing validation or with v > 64.
SearchResult search_ng(const SearchSpec& spec);

/// Re-verifies every representative from scratch and checks they are
/// pairwise non-isomorphic.
bool verify_search_output(const SearchResult& res);

} // namespace neumaier
