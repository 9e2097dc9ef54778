#pragma once

#include "neumaier/cliques.hpp"
#include "neumaier/graph.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace neumaier {

/// Complement all adjacencies between two disjoint nonempty vertex sets.
struct SwitchingStep {
    VertexSet side_a;
    VertexSet side_b;
};

/// Throws std::invalid_argument when the sides overlap, are empty or hold
/// out-of-range vertices.
Graph switch_edges(const Graph& g, const SwitchingStep& step);

/// True when every vertex of each side is adjacent to exactly half of the
/// other side, the condition under which switching preserves degrees.
bool is_half_adjacent(const Graph& g, const SwitchingStep& step);

/// A switched affine polar graph with the data used to build it.
struct Construction {
    int e = 0;
    Graph base{1};
    Graph graph{1};
    std::vector<SwitchingStep> steps;
    /// A 2^{e-1}-regular 2^e-clique of the result.
    VertexSet regular_clique;
    /// Vertices of the subgraph containing every switched edge.
    VertexSet delta;
};

enum class Gamma2Variant { PrimePrime, PrimePrimePrime };

std::string to_string(Gamma2Variant v);

/// Gamma_{e,1}: VO+(2e,2) switched on (W1, v+W1) and then on (W2, v+W2).
Construction construct_gamma1(int e);

/// Gamma_{e,2}: VO+(2e,2) switched on (W1, v+W1), then on (V1 u V2, C) for
/// PrimePrime or on (V0 u V3, C) for PrimePrimePrime.
Construction construct_gamma2(int e, Gamma2Variant variant = Gamma2Variant::PrimePrime);

/// VO+(2e,2) switched only on the first pair (W1, v+W1) of Gamma_{e,1}.
Graph single_switch_gamma(int e);

struct TheoremCheck {
    NeumaierParams expected;
    Regularity regularity;
    std::set<std::size_t> mu_support;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

NeumaierParams construction_params(int e);
std::set<std::size_t> construction_mu_support(int e);

/// Checks edge-regularity with the expected (v,k,lambda), the presence of a
/// regular clique with the expected (m,s), the three-valued mu-support and
/// that the graph is not strongly regular. Without a clique, one is searched
/// for among maximum cliques.
TheoremCheck check_construction_theorem(const Graph& g, int e);
TheoremCheck check_construction_theorem(const Graph& g, int e, const VertexSet& clique);
TheoremCheck check_construction_theorem(const Construction& c);

struct ExplorationStats {
    std::size_t graphs_expanded = 0;
    std::size_t candidate_pairs = 0;
    std::size_t edge_regular_results = 0;
};

struct ExplorationResult {
    /// Canonical graphs of the strictly Neumaier classes found, sorted by
    /// certificate.
    std::vector<Graph> strictly_neumaier;
    ExplorationStats stats;
};

/// Applies all sequences of at most depth switchings between disjoint
/// regular cliques whose sides are half-adjacent, keeping edge-regular
/// results with the parameters of g. Results are deduplicated up to
/// isomorphism at every level. Throws std::invalid_argument for depth < 1
/// or a graph that is not edge-regular.
ExplorationResult explore_switchings(const Graph& g, int depth, unsigned threads = 0);

} // namespace neumaier
