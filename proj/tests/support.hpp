#pragma once

#include "neumaier/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace neumaier::test {

inline Graph cycle(std::size_t n)
{
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return std::move(b).build();
}

inline Graph complete(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w)
            b.add_edge(u, w);
    return std::move(b).build();
}

inline Graph petersen()
{
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return std::move(b).build();
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w)
            if (coin(rng))
                b.add_edge(u, w);
    return std::move(b).build();
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& p)
{
    if (g1.order() != g2.order() || p.size() != g1.order())
        return false;
    for (Vertex u = 0; u < g1.order(); ++u)
        for (Vertex w = u + 1; w < g1.order(); ++w)
            if (g1.adjacent(u, w) != g2.adjacent(p[u], p[w]))
                return false;
    return true;
}

/// Number of bijections g1 -> g2 preserving adjacency, by trying all n!.
inline std::uint64_t brute_isomorphism_count(const Graph& g1, const Graph& g2)
{
    if (g1.order() != g2.order())
        return 0;
    std::vector<Vertex> p(g1.order());
    std::iota(p.begin(), p.end(), Vertex{0});
    std::uint64_t count = 0;
    do
        count += is_isomorphism(g1, g2, p);
    while (std::next_permutation(p.begin(), p.end()));
    return count;
}

} // namespace neumaier::test
