#include "neumaier/iso.hpp"

#include <algorithm>
#include <numeric>

namespace neumaier {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return h ^ x;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

    Vertex find(Vertex x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    // Keeps the smaller root so that roots are orbit minima.
    void unite(Vertex a, Vertex b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<Vertex> parent_;
};

// Ordered partition of the vertex set. Cells are contiguous runs of lab,
// named by their start position.
struct Partition {
    std::vector<Vertex> lab;
    std::vector<std::uint32_t> pos;
    std::vector<std::uint32_t> cell_of;
    std::vector<std::uint32_t> cell_end;
    std::uint32_t cells = 0;

    explicit Partition(std::size_t n) : lab(n), pos(n), cell_of(n, 0), cell_end(n, 0), cells(1)
    {
        std::iota(lab.begin(), lab.end(), Vertex{0});
        std::iota(pos.begin(), pos.end(), std::uint32_t{0});
        cell_end[0] = static_cast<std::uint32_t>(n);
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(lab.size()); }
    bool discrete() const { return cells == size(); }
};

class Refiner {
public:
    explicit Refiner(const Graph& g) : n_(g.order()), adj_(n_), count_(n_, 0), mark_(n_, 0), in_queue_(n_, 0)
    {
        for (Vertex u = 0; u < n_; ++u)
            adj_[u] = g.neighbours(u);
    }

    // Refines p to the coarsest equitable partition finer than it, starting
    // from the given splitter cells, and returns the trace hash.
    std::uint64_t refine(Partition& p, const std::vector<std::uint32_t>& splitters)
    {
        std::uint64_t trace = 0;
        std::vector<std::uint32_t> queue(splitters);
        std::size_t head = 0;
        for (auto c : splitters)
            in_queue_[c] = 1;

        std::vector<Vertex> touched;
        std::vector<std::uint32_t> touched_cells;
        while (head < queue.size() && !p.discrete()) {
            const auto w = queue[head++];
            in_queue_[w] = 0;
            trace = mix(trace, w);

            touched.clear();
            for (auto i = w; i < p.cell_end[w]; ++i)
                for (auto u : adj_[p.lab[i]])
                    if (count_[u]++ == 0)
                        touched.push_back(u);

            ++stamp_;
            touched_cells.clear();
            for (auto u : touched) {
                auto c = p.cell_of[u];
                if (mark_[c] != stamp_) {
                    mark_[c] = stamp_;
                    touched_cells.push_back(c);
                }
            }
            std::sort(touched_cells.begin(), touched_cells.end());

            for (auto c : touched_cells)
                trace = split(p, c, trace, queue);

            for (auto u : touched)
                count_[u] = 0;
        }
        for (auto i = head; i < queue.size(); ++i)
            in_queue_[queue[i]] = 0;
        return mix(trace, p.cells);
    }

private:
    std::uint64_t split(Partition& p, std::uint32_t c, std::uint64_t trace, std::vector<std::uint32_t>& queue)
    {
        const auto end = p.cell_end[c];
        auto first = p.lab.begin() + c, last = p.lab.begin() + end;
        bool uniform = std::all_of(first, last, [&](Vertex u) { return count_[u] == count_[*first]; });
        trace = mix(trace, c);
        if (uniform)
            return mix(trace, count_[*first]);

        std::sort(first, last, [&](Vertex a, Vertex b) {
            return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
        });
        for (auto i = c; i < end; ++i)
            p.pos[p.lab[i]] = i;

        const bool requeue_all = in_queue_[c] != 0;
        std::vector<std::uint32_t> parts;
        for (auto i = c; i < end;) {
            auto j = i;
            while (j < end && count_[p.lab[j]] == count_[p.lab[i]])
                ++j;
            parts.push_back(i);
            p.cell_end[i] = j;
            for (auto k = i; k < j; ++k)
                p.cell_of[p.lab[k]] = i;
            trace = mix(mix(trace, count_[p.lab[i]]), j - i);
            i = j;
        }
        p.cells += static_cast<std::uint32_t>(parts.size() - 1);

        std::size_t largest = 0;
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (p.cell_end[parts[i]] - parts[i] > p.cell_end[parts[largest]] - parts[largest])
                largest = i;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (in_queue_[parts[i]] || (!requeue_all && i == largest))
                continue;
            in_queue_[parts[i]] = 1;
            queue.push_back(parts[i]);
        }
        return trace;
    }

    std::size_t n_;
    std::vector<VertexSet> adj_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> mark_;
    std::vector<char> in_queue_;
    std::uint32_t stamp_ = 0;
};

void individualize(Partition& p, Vertex x)
{
    const auto c = p.cell_of[x];
    const auto i = p.pos[x];
    std::swap(p.lab[c], p.lab[i]);
    p.pos[p.lab[i]] = i;
    p.pos[x] = c;
    for (auto k = c + 1; k < p.cell_end[c]; ++k)
        p.cell_of[p.lab[k]] = c + 1;
    p.cell_end[c + 1] = p.cell_end[c];
    p.cell_end[c] = c + 1;
    ++p.cells;
}

// Target cell: first smallest non-singleton cell.
std::uint32_t target_cell(const Partition& p)
{
    std::uint32_t best = p.size(), best_size = 0;
    for (std::uint32_t c = 0; c < p.size(); c = p.cell_end[c]) {
        auto size = p.cell_end[c] - c;
        if (size > 1 && (best_size == 0 || size < best_size)) {
            best = c;
            best_size = size;
        }
    }
    return best;
}

struct Leaf {
    std::vector<Vertex> lab;
    std::vector<Vertex> path;
    std::vector<std::uint64_t> traces;
    std::vector<std::uint64_t> rows;
};

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()), refiner_(g) {}

    void run()
    {
        Partition p(n_);
        std::vector<std::uint32_t> splitters{0};
        traces_.push_back(refiner_.refine(p, splitters));
        expand(p, 0);
    }

    const Leaf& best() const { return best_; }
    const std::vector<std::vector<Vertex>>& generators() const { return generators_; }
    const std::vector<std::size_t>& first_path_orbits() const { return orbit_sizes_; }

private:
    // Returns the depth to resume at after an automorphism-driven backjump.
    std::optional<std::size_t> expand(const Partition& p, std::size_t depth)
    {
        if (p.discrete())
            return leaf(p);

        const auto cell = target_cell(p);
        std::vector<Vertex> candidates(p.lab.begin() + cell, p.lab.begin() + p.cell_end[cell]);
        std::sort(candidates.begin(), candidates.end());

        const bool on_first = !have_first_ || std::equal(path_.begin(), path_.end(), first_.path.begin());
        std::vector<Vertex> explored;
        std::vector<char> done(n_, 0);
        std::size_t gens_seen = static_cast<std::size_t>(-1);
        std::optional<UnionFind> orbits;

        for (auto x : candidates) {
            if (gens_seen != generators_.size()) {
                orbits = stabilizer_orbits();
                gens_seen = generators_.size();
                std::fill(done.begin(), done.end(), 0);
                for (auto y : explored)
                    done[orbits->find(y)] = 1;
            }
            if (done[orbits->find(x)])
                continue;
            done[orbits->find(x)] = 1;
            explored.push_back(x);

            Partition child = p;
            individualize(child, x);
            traces_.push_back(refiner_.refine(child, {child.cell_of[x]}));
            path_.push_back(x);

            std::optional<std::size_t> jump;
            if (!prunable())
                jump = expand(child, depth + 1);

            path_.pop_back();
            traces_.pop_back();
            if (jump && *jump < depth)
                return jump;
        }

        if (on_first && have_first_ && depth < first_.path.size()) {
            auto uf = stabilizer_orbits();
            auto root = uf.find(first_.path[depth]);
            std::size_t size = 0;
            for (Vertex u = 0; u < n_; ++u)
                size += uf.find(u) == root;
            if (orbit_sizes_.size() <= depth)
                orbit_sizes_.resize(depth + 1, 1);
            orbit_sizes_[depth] = size;
        }
        return std::nullopt;
    }

    // Orbits of the subgroup generated by known automorphisms fixing the
    // current path pointwise.
    UnionFind stabilizer_orbits() const
    {
        UnionFind uf(n_);
        for (const auto& gen : generators_) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](Vertex v) { return gen[v] == v; });
            if (!fixes)
                continue;
            for (Vertex u = 0; u < n_; ++u)
                uf.unite(u, gen[u]);
        }
        return uf;
    }

    static int compare_prefix(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
    {
        auto len = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < len; ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return a.size() <= b.size() ? 0 : 1;
    }

    bool prunable() const
    {
        if (!have_first_)
            return false;
        if (compare_prefix(traces_, first_.traces) == 0)
            return false;
        return compare_prefix(traces_, best_.traces) > 0;
    }

    std::vector<std::uint64_t> rows_of(const Partition& p) const
    {
        const auto words = bits::words_for(n_);
        std::vector<std::uint64_t> rows(n_ * words, 0);
        for (std::uint32_t i = 0; i < n_; ++i)
            bits::for_each(g_.row(p.lab[i]), [&](std::size_t w) {
                auto j = p.pos[w];
                rows[i * words + j / 64] |= 1ull << (j % 64);
            });
        return rows;
    }

    static std::size_t divergence(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
    {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i])
            ++i;
        return i;
    }

    void add_automorphism(const Leaf& from, const Partition& to)
    {
        std::vector<Vertex> gen(n_);
        bool identity = true;
        for (std::uint32_t i = 0; i < n_; ++i) {
            gen[from.lab[i]] = to.lab[i];
            identity = identity && from.lab[i] == to.lab[i];
        }
        if (!identity)
            generators_.push_back(std::move(gen));
    }

    std::optional<std::size_t> leaf(const Partition& p)
    {
        auto rows = rows_of(p);
        if (!have_first_) {
            first_ = Leaf{p.lab, path_, traces_, std::move(rows)};
            best_ = first_;
            have_first_ = true;
            return std::nullopt;
        }
        if (traces_ == first_.traces && rows == first_.rows) {
            add_automorphism(first_, p);
            return divergence(path_, first_.path);
        }
        int cmp = compare_prefix(traces_, best_.traces);
        if (cmp == 0 && traces_.size() == best_.traces.size()) {
            auto order = rows <=> best_.rows;
            cmp = order < 0 ? -1 : order > 0 ? 1 : 0;
        }
        if (cmp == 0) {
            add_automorphism(best_, p);
            return divergence(path_, best_.path);
        }
        if (cmp < 0)
            best_ = Leaf{p.lab, path_, traces_, std::move(rows)};
        return std::nullopt;
    }

    const Graph& g_;
    std::size_t n_;
    Refiner refiner_;
    std::vector<std::uint64_t> traces_;
    std::vector<Vertex> path_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<std::vector<Vertex>> generators_;
    std::vector<std::size_t> orbit_sizes_;
};

} // namespace

std::vector<std::uint64_t> CanonicalForm::certificate() const
{
    const auto n = graph.order();
    std::vector<std::uint64_t> out((n * (n - 1) / 2 + 63) / 64 + 1, 0);
    out[0] = n;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w, ++bit)
            if (graph.adjacent(u, w))
                out[1 + bit / 64] |= 1ull << (bit % 64);
    return out;
}

CanonicalForm canonical_form(const Graph& g)
{
    Search s(g);
    s.run();
    const auto& lab = s.best().lab;
    CanonicalForm cf;
    cf.labeling.resize(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i)
        cf.labeling[lab[i]] = i;
    cf.graph = g.relabeled(cf.labeling);
    return cf;
}

std::optional<std::vector<Vertex>> isomorphism(const Graph& g1, const Graph& g2)
{
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    auto c1 = canonical_form(g1), c2 = canonical_form(g2);
    if (!(c1 == c2))
        return std::nullopt;
    std::vector<Vertex> inverse2(g2.order());
    for (Vertex u = 0; u < g2.order(); ++u)
        inverse2[c2.labeling[u]] = u;
    std::vector<Vertex> p(g1.order());
    for (Vertex u = 0; u < g1.order(); ++u)
        p[u] = inverse2[c1.labeling[u]];
    return p;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) { return isomorphism(g1, g2).has_value(); }

std::size_t AutomorphismGroup::orbit_count() const
{
    std::size_t count = 0;
    for (Vertex u = 0; u < orbit_of.size(); ++u)
        count += orbit_of[u] == u;
    return count;
}

AutomorphismGroup automorphism_group(const Graph& g)
{
    Search s(g);
    s.run();
    AutomorphismGroup out;
    out.order = 1;
    for (auto size : s.first_path_orbits())
        out.order *= size;
    out.generators = s.generators();
    UnionFind uf(g.order());
    for (const auto& gen : out.generators)
        for (Vertex u = 0; u < g.order(); ++u)
            uf.unite(u, gen[u]);
    out.orbit_of.resize(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        out.orbit_of[u] = uf.find(u);
    return out;
}

boost::multiprecision::cpp_int automorphism_count(const Graph& g) { return automorphism_group(g).order; }

bool is_vertex_transitive(const Graph& g) { return automorphism_group(g).orbit_count() == 1; }

} // namespace neumaier
