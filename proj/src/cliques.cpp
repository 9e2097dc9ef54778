#include "neumaier/cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace neumaier {

namespace {

// Tomita-style pivoting Bron-Kerbosch over bitsets. With adaptive = true the
// floor rises to the largest clique seen so far, so only maximum cliques are
// guaranteed to survive.
class BronKerbosch {
public:
    BronKerbosch(const Graph& g, bool adaptive) : g_(g), adaptive_(adaptive) {}

    std::vector<VertexSet> run()
    {
        Bitset p(g_.order()), x(g_.order());
        for (Vertex u = 0; u < g_.order(); ++u)
            p.set(u);
        expand(p, x);
        if (adaptive_)
            std::erase_if(found_, [&](const VertexSet& c) { return c.size() < floor_; });
        for (auto& c : found_)
            std::sort(c.begin(), c.end());
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    void expand(Bitset& p, Bitset& x)
    {
        if (!p.any()) {
            if (!x.any() && current_.size() >= floor_) {
                found_.push_back(current_);
                if (adaptive_)
                    floor_ = std::max(floor_, current_.size());
            }
            return;
        }
        if (adaptive_ && current_.size() + p.count() < floor_)
            return;

        // Pivot maximising |P ∩ N(u)| over u in P ∪ X; lowest index wins ties.
        std::size_t best = 0;
        Vertex pivot = 0;
        bool have = false;
        auto consider = [&](std::size_t u) {
            auto c = bits::and_count(p.words(), g_.row(static_cast<Vertex>(u)));
            if (!have || c > best) {
                best = c;
                pivot = static_cast<Vertex>(u);
                have = true;
            }
        };
        bits::for_each(p.words(), consider);
        bits::for_each(x.words(), consider);

        Bitset candidates = p;
        candidates.subtract(g_.row(pivot));
        for (auto u : candidates.members()) {
            Bitset np = p, nx = x;
            np &= g_.row(u);
            nx &= g_.row(u);
            current_.push_back(u);
            expand(np, nx);
            current_.pop_back();
            p.reset(u);
            x.set(u);
            if (adaptive_ && current_.size() + p.count() < floor_)
                return;
        }
    }

    const Graph& g_;
    bool adaptive_;
    std::size_t floor_ = 0;
    VertexSet current_;
    std::vector<VertexSet> found_;
};

} // namespace

bool is_clique(const Graph& g, std::span<const Vertex> members)
{
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] >= g.order())
            return false;
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adjacent(members[i], members[j]))
                return false;
    }
    return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) { return BronKerbosch(g, false).run(); }

std::vector<VertexSet> maximum_cliques(const Graph& g) { return BronKerbosch(g, true).run(); }

std::optional<std::size_t> nexus(const Graph& g, std::span<const Vertex> members)
{
    if (members.empty())
        throw std::invalid_argument("clique must be nonempty");
    if (!is_clique(g, members))
        throw std::invalid_argument("vertex set is not a clique");
    auto inside = Bitset::from(g.order(), members);
    if (inside.count() != members.size())
        throw std::invalid_argument("clique has repeated vertices");
    if (inside.count() == g.order())
        throw std::invalid_argument("clique must be a proper subset of the vertex set");

    std::optional<std::size_t> m;
    for (Vertex w = 0; w < g.order(); ++w) {
        if (inside.test(w))
            continue;
        auto c = bits::and_count(g.row(w), inside.words());
        if (c == 0 || (m && *m != c))
            return std::nullopt;
        m = c;
    }
    return m;
}

CliqueInfo describe_clique(const Graph& g, VertexSet members)
{
    std::sort(members.begin(), members.end());
    CliqueInfo info;
    info.size = members.size();
    info.nexus = nexus(g, members);
    info.members = std::move(members);
    return info;
}

std::vector<CliqueInfo> regular_cliques(const Graph& g)
{
    auto reg = classify_regularity(g);
    if (reg.kind == RegularityKind::NotRegular || reg.kind == RegularityKind::Complete)
        return {};

    auto candidates = reg.is_edge_regular() ? maximum_cliques(g) : maximal_cliques(g);
    std::vector<CliqueInfo> out;
    for (auto& c : candidates) {
        if (c.size() == g.order())
            continue;
        auto info = describe_clique(g, std::move(c));
        if (info.nexus)
            out.push_back(std::move(info));
    }
    return out;
}

std::string to_string(NeumaierKind kind)
{
    switch (kind) {
    case NeumaierKind::NotNeumaier: return "NotNeumaier";
    case NeumaierKind::Neumaier: return "Neumaier";
    case NeumaierKind::StrictlyNeumaier: return "StrictlyNeumaier";
    }
    return "?";
}

VerificationReport verify(const Graph& g)
{
    VerificationReport rep;
    rep.regularity = classify_regularity(g);
    if (rep.regularity.kind != RegularityKind::Complete)
        for (auto [value, count] : mu_spectrum(g))
            rep.mu_support.insert(value);
    rep.regular_cliques = regular_cliques(g);

    if (rep.regularity.is_edge_regular() && !rep.regular_cliques.empty()) {
        const auto& first = rep.regular_cliques.front();
        rep.params = NeumaierParams{rep.regularity.v, rep.regularity.k, rep.regularity.lambda,
                                    static_cast<std::int64_t>(*first.nexus), static_cast<std::int64_t>(first.size)};
        rep.kind = rep.regularity.is_strongly_regular() ? NeumaierKind::Neumaier : NeumaierKind::StrictlyNeumaier;
    }
    return rep;
}

namespace {

struct NamedBuilder {
    Graph operator()(const family::CompleteMultipartite& f) const
    {
        if (f.parts < 2 || f.part_size < 1)
            throw std::invalid_argument("K_{r x t} needs r >= 2 and t >= 1");
        GraphBuilder b(f.parts * f.part_size);
        for (Vertex u = 0; u < b.order(); ++u)
            for (Vertex w = u + 1; w < b.order(); ++w)
                if (u / f.part_size != w / f.part_size)
                    b.add_edge(u, w);
        return std::move(b).build();
    }

    Graph operator()(const family::SquareLattice& f) const
    {
        if (f.n < 2)
            throw std::invalid_argument("L2(n) needs n >= 2");
        GraphBuilder b(f.n * f.n);
        for (Vertex u = 0; u < b.order(); ++u)
            for (Vertex w = u + 1; w < b.order(); ++w)
                if (u / f.n == w / f.n || u % f.n == w % f.n)
                    b.add_edge(u, w);
        return std::move(b).build();
    }

    Graph operator()(const family::Triangular& f) const
    {
        if (f.n < 3)
            throw std::invalid_argument("T(n) needs n >= 3");
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < f.n; ++i)
            for (std::size_t j = i + 1; j < f.n; ++j)
                pairs.emplace_back(i, j);
        GraphBuilder b(pairs.size());
        for (Vertex u = 0; u < pairs.size(); ++u)
            for (Vertex w = u + 1; w < pairs.size(); ++w) {
                auto [a, c] = pairs[u];
                auto [d, e] = pairs[w];
                if (a == d || a == e || c == d || c == e)
                    b.add_edge(u, w);
            }
        return std::move(b).build();
    }

    Graph operator()(const family::Shrikhande&) const
    {
        GraphBuilder b(16);
        const int steps[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c)
                for (auto& s : steps) {
                    auto u = static_cast<Vertex>(4 * a + c);
                    auto w = static_cast<Vertex>(4 * ((a + s[0]) % 4) + (c + s[1]) % 4);
                    b.add_edge(u, w);
                }
        return std::move(b).build();
    }
};

} // namespace

Graph generate_named(const NamedFamily& f) { return std::visit(NamedBuilder{}, f); }

} // namespace neumaier
