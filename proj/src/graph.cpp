#include "neumaier/graph.hpp"

#include <atomic>
#include <set>
#include <stdexcept>

namespace neumaier {

namespace {
std::atomic<std::size_t> vertex_cap{4096};
}

std::size_t max_vertices() { return vertex_cap.load(); }

void set_max_vertices(std::size_t cap)
{
    if (cap == 0)
        throw std::invalid_argument("vertex cap must be positive");
    vertex_cap.store(cap);
}

Graph::Graph(std::size_t order) : order_(order), words_(bits::words_for(order))
{
    if (order == 0)
        throw std::invalid_argument("graph must have at least one vertex");
    if (order > max_vertices())
        throw std::invalid_argument("graph order " + std::to_string(order) + " exceeds vertex cap " +
                                    std::to_string(max_vertices()));
    bits_.assign(order_ * words_, 0);
}

Graph Graph::from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges)
{
    GraphBuilder b(order);
    for (auto [u, w] : edges)
        b.add_edge(u, w);
    return std::move(b).build();
}

std::size_t Graph::edge_count() const { return bits::count(bits_) / 2; }

VertexSet Graph::neighbours(Vertex u) const
{
    VertexSet out;
    bits::for_each(row(u), [&](std::size_t w) { out.push_back(static_cast<Vertex>(w)); });
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order_; ++u)
        bits::for_each(row(u), [&](std::size_t w) {
            if (w > u)
                out.emplace_back(u, static_cast<Vertex>(w));
        });
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const
{
    if (perm.size() != order_)
        throw std::invalid_argument("relabeling has wrong length");
    std::vector<bool> seen(order_, false);
    for (auto p : perm) {
        if (p >= order_ || seen[p])
            throw std::invalid_argument("relabeling is not a permutation");
        seen[p] = true;
    }
    GraphBuilder b(order_);
    for (auto [u, w] : edges())
        b.add_edge(perm[u], perm[w]);
    return std::move(b).build();
}

void GraphBuilder::check_pair(Vertex u, Vertex w) const
{
    if (u >= g_.order() || w >= g_.order())
        throw std::out_of_range("vertex index out of range");
    if (u == w)
        throw std::invalid_argument("loops are not allowed");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex w) { return set_edge(u, w, true); }
GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex w) { return set_edge(u, w, false); }

GraphBuilder& GraphBuilder::toggle_edge(Vertex u, Vertex w) { return set_edge(u, w, !g_.adjacent(u, w)); }

GraphBuilder& GraphBuilder::set_edge(Vertex u, Vertex w, bool present)
{
    check_pair(u, w);
    if (present) {
        bits::set(row(u), w);
        bits::set(row(w), u);
    } else {
        bits::reset(row(u), w);
        bits::reset(row(w), u);
    }
    return *this;
}

std::string to_string(const NeumaierParams& p)
{
    return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + ";" +
           std::to_string(p.m) + "," + std::to_string(p.s) + ")";
}

std::string to_string(RegularityKind kind)
{
    switch (kind) {
    case RegularityKind::NotRegular: return "NotRegular";
    case RegularityKind::Regular: return "Regular";
    case RegularityKind::EdgeRegular: return "EdgeRegular";
    case RegularityKind::CoEdgeRegular: return "CoEdgeRegular";
    case RegularityKind::StronglyRegular: return "StronglyRegular";
    case RegularityKind::Complete: return "Complete";
    case RegularityKind::Empty: return "Empty";
    }
    return "?";
}

std::vector<std::size_t> degree_sequence(const Graph& g)
{
    std::vector<std::size_t> out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        out[u] = g.degree(u);
    return out;
}

Regularity classify_regularity(const Graph& g)
{
    const auto n = g.order();
    Regularity r;
    r.v = static_cast<std::int64_t>(n);

    auto degrees = degree_sequence(g);
    for (auto d : degrees)
        if (d != degrees[0])
            return r;
    r.k = static_cast<std::int64_t>(degrees[0]);

    if (r.k == 0) {
        r.kind = RegularityKind::Empty;
        return r;
    }
    if (r.k == r.v - 1) {
        r.kind = RegularityKind::Complete;
        r.lambda = r.v - 2;
        return r;
    }

    std::optional<std::size_t> lambda, mu;
    bool edge_regular = true, co_edge_regular = true;
    for (Vertex u = 0; u < n && (edge_regular || co_edge_regular); ++u)
        for (Vertex w = u + 1; w < n; ++w) {
            auto c = g.common_neighbours(u, w);
            auto& slot = g.adjacent(u, w) ? lambda : mu;
            auto& flag = g.adjacent(u, w) ? edge_regular : co_edge_regular;
            if (!slot)
                slot = c;
            else if (*slot != c)
                flag = false;
        }

    if (edge_regular)
        r.lambda = static_cast<std::int64_t>(*lambda);
    if (co_edge_regular)
        r.mu = static_cast<std::int64_t>(*mu);

    if (edge_regular && co_edge_regular)
        r.kind = RegularityKind::StronglyRegular;
    else if (edge_regular) {
        r.kind = RegularityKind::EdgeRegular;
    } else if (co_edge_regular) {
        r.kind = RegularityKind::CoEdgeRegular;
    } else
        r.kind = RegularityKind::Regular;
    return r;
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex w = u + 1; w < g.order(); ++w)
            if (!g.adjacent(u, w))
                b.add_edge(u, w);
    return std::move(b).build();
}

std::map<std::size_t, std::size_t> mu_spectrum(const Graph& g)
{
    std::map<std::size_t, std::size_t> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex w = u + 1; w < g.order(); ++w)
            if (!g.adjacent(u, w))
                ++out[g.common_neighbours(u, w)];
    if (out.empty())
        throw std::domain_error("no non-adjacent pairs");
    return out;
}

std::map<std::size_t, std::size_t> lambda_spectrum(const Graph& g)
{
    std::map<std::size_t, std::size_t> out;
    for (auto [u, w] : g.edges())
        ++out[g.common_neighbours(u, w)];
    return out;
}

} // namespace neumaier
