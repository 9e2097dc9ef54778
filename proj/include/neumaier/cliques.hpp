#pragma once

#include "neumaier/graph.hpp"

#include <optional>
#include <set>
#include <span>
#include <variant>
#include <vector>

namespace neumaier {

/// A clique together with its nexus, when it is regular.
struct CliqueInfo {
    VertexSet members;
    std::size_t size = 0;
    std::optional<std::size_t> nexus;

    bool operator==(const CliqueInfo&) const = default;
};

bool is_clique(const Graph& g, std::span<const Vertex> members);

/// All inclusion-maximal cliques, each sorted, in lexicographic order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// All cliques of maximum size, in lexicographic order.
std::vector<VertexSet> maximum_cliques(const Graph& g);

/// Number of neighbours every outside vertex has in members, if that number
/// is the same positive m for all of them. Throws std::invalid_argument when
/// members is not a clique, is empty, or is the whole vertex set.
std::optional<std::size_t> nexus(const Graph& g, std::span<const Vertex> members);

CliqueInfo describe_clique(const Graph& g, VertexSet members);

/// Regular cliques of a regular graph. For edge-regular graphs only
/// maximum cliques can be regular, so only those are examined; otherwise all
/// maximal cliques are. Non-regular and complete graphs yield an empty list.
std::vector<CliqueInfo> regular_cliques(const Graph& g);

enum class NeumaierKind { NotNeumaier, Neumaier, StrictlyNeumaier };

std::string to_string(NeumaierKind kind);

struct VerificationReport {
    Regularity regularity;
    std::vector<CliqueInfo> regular_cliques;
    NeumaierKind kind = NeumaierKind::NotNeumaier;
    std::optional<NeumaierParams> params;
    std::set<std::size_t> mu_support;
};

VerificationReport verify(const Graph& g);

namespace family {
struct CompleteMultipartite {
    std::size_t parts;
    std::size_t part_size;
};
struct SquareLattice {
    std::size_t n;
};
struct Triangular {
    std::size_t n;
};
struct Shrikhande {};
} // namespace family

using NamedFamily =
    std::variant<family::CompleteMultipartite, family::SquareLattice, family::Triangular, family::Shrikhande>;

/// K_{r x t} on vertices part*t + i; L2(n) on i*n + j; T(n) on the 2-subsets
/// of {0..n-1} in lexicographic order; Shrikhande as the Cayley graph on
/// Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}, vertex 4a + b.
Graph generate_named(const NamedFamily& f);

} // namespace neumaier
