#pragma once

#include "neumaier/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace neumaier {

/// Canonical relabeling of a graph. Two graphs are isomorphic iff their
/// canonical graphs are equal.
struct CanonicalForm {
    /// Vertex u of the source graph becomes vertex labeling[u].
    std::vector<Vertex> labeling;
    Graph graph{1};

    /// Upper triangle of the canonical adjacency matrix, row by row, packed
    /// into 64-bit words. Suitable as an ordered or hashed dedup key.
    std::vector<std::uint64_t> certificate() const;

    bool operator==(const CanonicalForm& other) const { return graph == other.graph; }
};

CanonicalForm canonical_form(const Graph& g);

/// When g1 and g2 are isomorphic, a permutation p with uw an edge of g1 iff
/// p[u]p[w] is an edge of g2.
std::optional<std::vector<Vertex>> isomorphism(const Graph& g1, const Graph& g2);
bool is_isomorphic(const Graph& g1, const Graph& g2);

struct AutomorphismGroup {
    boost::multiprecision::cpp_int order;
    /// Generators, each as an image array.
    std::vector<std::vector<Vertex>> generators;
    /// Smallest vertex of each vertex's orbit.
    std::vector<Vertex> orbit_of;

    std::size_t orbit_count() const;
};

AutomorphismGroup automorphism_group(const Graph& g);
boost::multiprecision::cpp_int automorphism_count(const Graph& g);
bool is_vertex_transitive(const Graph& g);

} // namespace neumaier
