#pragma once

#include "neumaier/bitset.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace neumaier {

/// Upper bound on the vertex count of any Graph. Defaults to 4096, which
/// covers the affine polar constructions up to e = 6.
std::size_t max_vertices();
void set_max_vertices(std::size_t cap);

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Each vertex owns a row of word_count() 64-bit words; bit w of row u is
/// set iff uw is an edge. Rows are kept symmetric with an empty diagonal.
class Graph {
public:
    /// Edgeless graph. Throws std::invalid_argument if order is 0 or over
    /// the vertex cap.
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const { return order_; }
    std::size_t word_count() const { return words_; }

    bool adjacent(Vertex u, Vertex w) const { return bits::test(row(u), w); }

    std::span<const std::uint64_t> row(Vertex u) const
    {
        return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
    }

    std::size_t degree(Vertex u) const { return bits::count(row(u)); }
    std::size_t common_neighbours(Vertex u, Vertex w) const { return bits::and_count(row(u), row(w)); }
    std::size_t edge_count() const;

    VertexSet neighbours(Vertex u) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// The graph with vertex u renamed to perm[u].
    Graph relabeled(std::span<const Vertex> perm) const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;

    std::size_t order_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t order) : g_(order) {}
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    std::size_t order() const { return g_.order(); }
    bool adjacent(Vertex u, Vertex w) const { return g_.adjacent(u, w); }

    GraphBuilder& add_edge(Vertex u, Vertex w);
    GraphBuilder& remove_edge(Vertex u, Vertex w);
    GraphBuilder& toggle_edge(Vertex u, Vertex w);
    GraphBuilder& set_edge(Vertex u, Vertex w, bool present);

    const Graph& view() const { return g_; }
    Graph build() const& { return g_; }
    Graph build() && { return std::move(g_); }

private:
    std::span<std::uint64_t> row(Vertex u)
    {
        return {g_.bits_.data() + static_cast<std::size_t>(u) * g_.words_, g_.words_};
    }
    void check_pair(Vertex u, Vertex w) const;

    Graph g_;
};

struct ErgParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;

    auto operator<=>(const ErgParams&) const = default;
};

struct SrgParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    auto operator<=>(const SrgParams&) const = default;
};

/// Parameter tuple (v,k,lambda;m,s) of a Neumaier graph: edge-regular
/// (v,k,lambda) with an m-regular s-clique.
struct NeumaierParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t m = 0;
    std::int64_t s = 0;

    ErgParams erg() const { return {v, k, lambda}; }
    auto operator<=>(const NeumaierParams&) const = default;
};

std::string to_string(const NeumaierParams& p);

enum class RegularityKind { NotRegular, Regular, EdgeRegular, CoEdgeRegular, StronglyRegular, Complete, Empty };

std::string to_string(RegularityKind kind);

/// Finest regularity class of a graph. Fields not meaningful for the kind
/// are left at -1 (for example mu of an EdgeRegular graph).
struct Regularity {
    RegularityKind kind = RegularityKind::NotRegular;
    std::int64_t v = 0;
    std::int64_t k = -1;
    std::int64_t lambda = -1;
    std::int64_t mu = -1;

    bool is_edge_regular() const
    {
        return kind == RegularityKind::EdgeRegular || kind == RegularityKind::StronglyRegular;
    }
    bool is_strongly_regular() const { return kind == RegularityKind::StronglyRegular; }
    ErgParams erg() const { return {v, k, lambda}; }
    SrgParams srg() const { return {v, k, lambda, mu}; }

    bool operator==(const Regularity&) const = default;
};

std::vector<std::size_t> degree_sequence(const Graph& g);
Regularity classify_regularity(const Graph& g);
Graph complement(const Graph& g);

/// Common-neighbour counts over unordered non-adjacent pairs, as value -> multiplicity.
/// Throws std::domain_error for complete graphs ("no non-adjacent pairs").
std::map<std::size_t, std::size_t> mu_spectrum(const Graph& g);

/// Common-neighbour counts over edges, as value -> multiplicity.
std::map<std::size_t, std::size_t> lambda_spectrum(const Graph& g);

} // namespace neumaier
