#include "neumaier/search.hpp"

#include "neumaier/cliques.hpp"
#include "neumaier/iso.hpp"
#include "neumaier/params.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace neumaier {

namespace {

using Mask = std::uint64_t;

Mask bit(std::uint32_t i) { return Mask{1} << i; }

// Multisets of m-subsets of the seed clique, one per vertex outside it, in
// which every clique vertex lies in k-s+1 blocks and every pair of clique
// vertices in lambda-s+2 blocks. Only the lexicographically least member of
// each orbit under relabelling the clique is kept.
class DesignEnumerator {
public:
    explicit DesignEnumerator(const NeumaierParams& p)
        : s_(static_cast<int>(p.s)), blocks_(static_cast<std::size_t>(p.v - p.s)), point_cap_(p.k - p.s + 1),
          pair_cap_(p.lambda - p.s + 2)
    {
        for (Mask x = 0; x < bit(static_cast<std::uint32_t>(s_)); ++x)
            if (std::popcount(x) == p.m)
                subsets_.push_back(x);
        point_.assign(s_, 0);
        pair_.assign(static_cast<std::size_t>(s_ * s_), 0);
    }

    std::vector<std::vector<Mask>> run()
    {
        // The least orbit member starts with the least subset.
        std::vector<Mask> current;
        if (blocks_ == 0 || subsets_.empty() || !add(subsets_[0], +1))
            return {};
        current.push_back(subsets_[0]);
        extend(current, 0);
        return std::move(found_);
    }

private:
    void extend(std::vector<Mask>& current, std::size_t first)
    {
        if (current.size() == blocks_) {
            if (complete() && is_least(current))
                found_.push_back(current);
            return;
        }
        const auto left = static_cast<std::int64_t>(blocks_ - current.size());
        for (int a = 0; a < s_; ++a)
            if (point_cap_ - point_[a] > left)
                return;
        for (auto i = first; i < subsets_.size(); ++i) {
            if (!add(subsets_[i], +1)) {
                add(subsets_[i], -1);
                continue;
            }
            current.push_back(subsets_[i]);
            extend(current, i);
            current.pop_back();
            add(subsets_[i], -1);
        }
    }

    bool add(Mask block, int delta)
    {
        bool ok = true;
        for (int a = 0; a < s_; ++a) {
            if (!(block >> a & 1u))
                continue;
            point_[a] += delta;
            ok = ok && point_[a] <= point_cap_;
            for (int b = a + 1; b < s_; ++b)
                if (block >> b & 1u) {
                    pair_[a * s_ + b] += delta;
                    ok = ok && pair_[a * s_ + b] <= pair_cap_;
                }
        }
        return ok;
    }

    bool complete() const
    {
        for (int a = 0; a < s_; ++a) {
            if (point_[a] != point_cap_)
                return false;
            for (int b = a + 1; b < s_; ++b)
                if (pair_[a * s_ + b] != pair_cap_)
                    return false;
        }
        return true;
    }

    bool is_least(const std::vector<Mask>& design) const
    {
        std::vector<int> perm(s_);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Mask> image(design.size());
        while (std::next_permutation(perm.begin(), perm.end())) {
            for (std::size_t i = 0; i < design.size(); ++i) {
                Mask y = 0;
                for (int a = 0; a < s_; ++a)
                    if (design[i] >> a & 1u)
                        y |= bit(static_cast<std::uint32_t>(perm[a]));
                image[i] = y;
            }
            std::sort(image.begin(), image.end());
            if (image < design)
                return false;
        }
        return true;
    }

    int s_;
    std::size_t blocks_;
    std::int64_t point_cap_;
    std::int64_t pair_cap_;
    std::vector<Mask> subsets_;
    std::vector<std::int64_t> point_;
    std::vector<std::int64_t> pair_;
    std::vector<std::vector<Mask>> found_;
};

class Completer {
public:
    Completer(const SearchSpec& spec, SearchStats& stats, std::map<std::vector<std::uint64_t>, Graph>& found)
        : spec_(spec), stats_(stats), found_(found), v_(static_cast<std::uint32_t>(spec.params.v)),
          s_(static_cast<std::uint32_t>(spec.params.s)), k_(static_cast<int>(spec.params.k)),
          lambda_(static_cast<int>(spec.params.lambda)), start_(std::chrono::steady_clock::now())
    {
    }

    bool stopped() const { return stopped_; }
    bool out_of_budget() const { return out_of_budget_; }

    void run(const std::vector<Mask>& design)
    {
        adj_.assign(v_, 0);
        degree_.assign(v_, 0);
        same_class_before_.assign(v_, 0);
        for (std::uint32_t a = 0; a < s_; ++a)
            for (std::uint32_t b = a + 1; b < s_; ++b)
                connect(a, b);
        for (std::uint32_t i = 0; i < design.size(); ++i) {
            const auto u = s_ + i;
            for (std::uint32_t a = 0; a < s_; ++a)
                if (design[i] >> a & 1u)
                    connect(a, u);
            for (std::uint32_t j = 0; j < i; ++j)
                if (design[j] == design[i])
                    same_class_before_[u] |= bit(s_ + j);
        }
        row(s_);
    }

private:
    void connect(std::uint32_t a, std::uint32_t b)
    {
        adj_[a] |= bit(b);
        adj_[b] |= bit(a);
        ++degree_[a];
        ++degree_[b];
    }

    void disconnect(std::uint32_t a, std::uint32_t b)
    {
        adj_[a] &= ~bit(b);
        adj_[b] &= ~bit(a);
        --degree_[a];
        --degree_[b];
    }

    int common(std::uint32_t a, std::uint32_t b) const { return std::popcount(adj_[a] & adj_[b]); }

    void prune(const char* reason) { ++stats_.prunes[reason]; }

    bool tick()
    {
        if (stopped_)
            return false;
        if (++stats_.nodes > spec_.budget_nodes) {
            stopped_ = out_of_budget_ = true;
            return false;
        }
        if ((stats_.nodes & 0x3fff) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > spec_.budget_seconds) {
                stopped_ = out_of_budget_ = true;
                return false;
            }
        }
        return true;
    }

    void row(std::uint32_t r)
    {
        if (r == v_) {
            leaf();
            return;
        }
        Mask pending = 0;
        if (spec_.symmetry_breaking) {
            const Mask earlier = bit(r) - 1;
            for (Mask rest = same_class_before_[r]; rest; rest &= rest - 1) {
                auto u = static_cast<std::uint32_t>(std::countr_zero(rest));
                Mask diff = (adj_[u] ^ adj_[r]) & earlier & ~bit(u);
                if (diff == 0) {
                    pending |= bit(u);
                } else if (adj_[u] >> std::countr_zero(diff) & 1u) {
                    prune("symmetry");
                    return;
                }
            }
        }
        choose(r, r + 1, k_ - degree_[r], pending);
    }

    void choose(std::uint32_t r, std::uint32_t c, int need, Mask pending)
    {
        if (!tick())
            return;
        if (c == v_) {
            if (need == 0)
                finish_row(r);
            return;
        }
        const int remaining = static_cast<int>(v_ - c);
        if (need > remaining) {
            prune("degree");
            return;
        }
        if (!lower_bounds_hold(r, c, need)) {
            prune("lambda_lower");
            return;
        }

        if (need > 0 && degree_[c] < k_) {
            connect(r, c);
            if (upper_bounds_hold(r, c))
                choose(r, c + 1, need - 1, pending & adj_[c]);
            else
                prune("lambda_upper");
            disconnect(r, c);
        }
        if (stopped_)
            return;
        if (need < remaining) {
            if (pending & adj_[c])
                prune("symmetry");
            else if (degree_[c] + static_cast<int>(v_ - r) - 2 < k_)
                prune("degree");
            else
                choose(r, c + 1, need, pending);
        }
    }

    // Only pairs through the new edge rc gained a common neighbour.
    bool upper_bounds_hold(std::uint32_t r, std::uint32_t c) const
    {
        if (common(r, c) > lambda_)
            return false;
        for (Mask rest = adj_[c] & adj_[r]; rest; rest &= rest - 1) {
            auto y = static_cast<std::uint32_t>(std::countr_zero(rest));
            if (common(r, y) > lambda_ || common(c, y) > lambda_)
                return false;
        }
        return true;
    }

    // Known neighbours of r can only gain common neighbours in columns >= c.
    bool lower_bounds_hold(std::uint32_t r, std::uint32_t c, int need) const
    {
        const Mask open = ~(bit(c) - 1);
        for (Mask rest = adj_[r] & (bit(r) - 1); rest; rest &= rest - 1) {
            auto y = static_cast<std::uint32_t>(std::countr_zero(rest));
            if (common(r, y) + std::min(std::popcount(adj_[y] & open), need) < lambda_)
                return false;
        }
        return true;
    }

    void finish_row(std::uint32_t r)
    {
        for (Mask rest = adj_[r] & (bit(r) - 1); rest; rest &= rest - 1)
            if (common(r, static_cast<std::uint32_t>(std::countr_zero(rest))) != lambda_) {
                prune("lambda_exact");
                return;
            }

        const Mask future = ~((bit(r) << 1) - 1) & (v_ == 64 ? ~Mask{0} : bit(v_) - 1);
        const int open_columns = static_cast<int>(v_) - static_cast<int>(r) - 2;
        for (Mask rest = future; rest; rest &= rest - 1) {
            auto z = static_cast<std::uint32_t>(std::countr_zero(rest));
            if (degree_[z] + open_columns < k_) {
                prune("degree");
                return;
            }
            const int spare = k_ - degree_[z];
            for (Mask known = adj_[z] & ((bit(r) << 1) - 1); known; known &= known - 1) {
                auto y = static_cast<std::uint32_t>(std::countr_zero(known));
                int reachable = std::popcount(adj_[y] & future & ~bit(z));
                if (common(y, z) + std::min(reachable, spare) < lambda_) {
                    prune("lambda_lower");
                    return;
                }
            }
        }
        row(r + 1);
    }

    void leaf()
    {
        ++stats_.completions;
        GraphBuilder b(v_);
        for (std::uint32_t u = 0; u < v_; ++u)
            for (Mask rest = adj_[u] & ~((bit(u) << 1) - 1); rest; rest &= rest - 1)
                b.add_edge(u, static_cast<Vertex>(std::countr_zero(rest)));
        auto g = std::move(b).build();
        if (spec_.strict && classify_regularity(g).is_strongly_regular())
            return;
        auto cf = canonical_form(g);
        found_.emplace(cf.certificate(), std::move(cf.graph));
        if (spec_.mode == SearchMode::FirstFound)
            stopped_ = true;
    }

    const SearchSpec& spec_;
    SearchStats& stats_;
    std::map<std::vector<std::uint64_t>, Graph>& found_;
    std::uint32_t v_, s_;
    int k_, lambda_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Mask> adj_;
    std::vector<int> degree_;
    std::vector<Mask> same_class_before_;
    bool stopped_ = false;
    bool out_of_budget_ = false;
};

} // namespace

SearchResult search_ng(const SearchSpec& spec)
{
    validate(spec.params);
    if (spec.params.v > 64)
        throw std::invalid_argument("search supports at most 64 vertices");
    if (spec.params.m > spec.params.s)
        throw std::invalid_argument("nexus cannot exceed the clique size");

    const auto start = std::chrono::steady_clock::now();
    SearchResult res;
    res.spec = spec;
    std::map<std::vector<std::uint64_t>, Graph> found;

    auto designs = DesignEnumerator(spec.params).run();
    res.stats.designs = designs.size();
    Completer completer(spec, res.stats, found);
    for (const auto& design : designs) {
        completer.run(design);
        if (completer.stopped())
            break;
    }
    res.exhaustive = !completer.stopped();
    for (auto& [key, g] : found)
        res.representatives.push_back(std::move(g));
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

bool verify_search_output(const SearchResult& res)
{
    const auto& want = res.spec.params;
    for (const auto& g : res.representatives) {
        if (g.order() != static_cast<std::size_t>(want.v))
            return false;
        auto rep = verify(g);
        if (!rep.params || !rep.regularity.is_edge_regular() || rep.regularity.erg() != want.erg())
            return false;
        bool has_clique = std::any_of(rep.regular_cliques.begin(), rep.regular_cliques.end(), [&](const CliqueInfo& c) {
            return static_cast<std::int64_t>(c.size) == want.s && static_cast<std::int64_t>(*c.nexus) == want.m;
        });
        if (!has_clique)
            return false;
        if (res.spec.strict && rep.kind != NeumaierKind::StrictlyNeumaier)
            return false;
    }
    for (std::size_t i = 0; i < res.representatives.size(); ++i)
        for (std::size_t j = i + 1; j < res.representatives.size(); ++j)
            if (is_isomorphic(res.representatives[i], res.representatives[j]))
                return false;
    return true;
}

} // namespace neumaier
