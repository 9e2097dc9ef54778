#include "neumaier/switching.hpp"

#include "neumaier/affine_polar.hpp"
#include "neumaier/iso.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace neumaier {

namespace {

std::string repeat(char c, int n) { return std::string(static_cast<std::size_t>(std::max(n, 0)), c); }

void check_e(int e)
{
    if (e < 2 || e > 6)
        throw std::invalid_argument("construction needs 2 <= e <= 6");
}

VertexSet merge(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Construction apply_steps(int e, std::vector<SwitchingStep> steps, VertexSet clique)
{
    Construction c;
    c.e = e;
    c.base = build_vo_plus(e);
    c.graph = c.base;
    for (const auto& step : steps)
        c.graph = switch_edges(c.graph, step);
    c.steps = std::move(steps);
    c.regular_clique = std::move(clique);
    c.delta = pattern_set(repeat('*', e), repeat('0', e - 2) + "**");
    return c;
}

} // namespace

Graph switch_edges(const Graph& g, const SwitchingStep& step)
{
    if (step.side_a.empty() || step.side_b.empty())
        throw std::invalid_argument("switching sides must be nonempty");
    auto a = Bitset::from(g.order(), step.side_a);
    for (auto u : step.side_b)
        if (u < g.order() && a.test(u))
            throw std::invalid_argument("switching sides overlap");
    GraphBuilder b(g);
    for (auto u : step.side_a)
        for (auto w : step.side_b)
            b.toggle_edge(u, w);
    return std::move(b).build();
}

bool is_half_adjacent(const Graph& g, const SwitchingStep& step)
{
    auto half = [&](const VertexSet& from, const VertexSet& to) {
        if (to.size() % 2 != 0)
            return false;
        auto target = Bitset::from(g.order(), to);
        return std::all_of(from.begin(), from.end(), [&](Vertex u) {
            return bits::and_count(g.row(u), target.words()) * 2 == to.size();
        });
    };
    return half(step.side_a, step.side_b) && half(step.side_b, step.side_a);
}

std::string to_string(Gamma2Variant v) { return v == Gamma2Variant::PrimePrime ? "PrimePrime" : "PrimePrimePrime"; }

Construction construct_gamma1(int e)
{
    check_e(e);
    const auto top = repeat('*', e);
    const auto w1 = pattern_set(top, repeat('0', e));
    const auto v_w1 = pattern_set(top, repeat('0', e - 2) + "10");
    const auto w2 = pattern_set(repeat('*', e - 1) + "0", repeat('0', e - 1) + "*");
    const auto v_w2 = pattern_set(repeat('*', e - 1) + "0", repeat('0', e - 2) + "1*");
    return apply_steps(e, {{w1, v_w1}, {w2, v_w2}}, w1);
}

Construction construct_gamma2(int e, Gamma2Variant variant)
{
    check_e(e);
    const auto top = repeat('*', e);
    const auto head = repeat('*', e - 1);
    const auto zeros = repeat('0', e);
    const auto last = repeat('0', e - 1) + "1";
    const auto w1 = pattern_set(top, zeros);
    const auto v_w1 = pattern_set(top, last);
    const auto v0 = pattern_set(head + "0", zeros);
    const auto v1 = pattern_set(head + "1", zeros);
    const auto v2 = pattern_set(head + "0", last);
    const auto v3 = pattern_set(head + "1", last);
    const auto c = pattern_set(head + "0", repeat('0', e - 2) + "1*");
    const auto side = variant == Gamma2Variant::PrimePrime ? merge(v1, v2) : merge(v0, v3);
    auto clique = pattern_set(head + "1", repeat('0', e - 2) + "1*");
    return apply_steps(e, {{w1, v_w1}, {side, c}}, std::move(clique));
}

Graph single_switch_gamma(int e)
{
    auto c = construct_gamma1(e);
    return switch_edges(c.base, c.steps.front());
}

NeumaierParams construction_params(int e)
{
    check_e(e);
    const std::int64_t h = std::int64_t{1} << (e - 1);
    const std::int64_t q = std::int64_t{1} << (e - 2);
    return {std::int64_t{1} << (2 * e), (h + 1) * (2 * h - 1), 2 * (q + 1) * (h - 1), h, 2 * h};
}

std::set<std::size_t> construction_mu_support(int e)
{
    check_e(e);
    const std::size_t h = std::size_t{1} << (e - 1);
    const std::size_t mu = h * (h + 1);
    return {mu - h, mu, mu + h};
}

namespace {

TheoremCheck check_common(const Graph& g, int e)
{
    TheoremCheck out;
    out.expected = construction_params(e);
    if (g.order() != static_cast<std::size_t>(out.expected.v)) {
        out.failures.push_back("order is " + std::to_string(g.order()) + ", expected " +
                               std::to_string(out.expected.v));
        return out;
    }
    out.regularity = classify_regularity(g);
    if (!out.regularity.is_edge_regular())
        out.failures.push_back("not edge-regular (" + to_string(out.regularity.kind) + ")");
    else if (out.regularity.erg() != out.expected.erg())
        out.failures.push_back("edge-regular parameters differ from expected");
    if (out.regularity.is_strongly_regular())
        out.failures.push_back("strongly regular");
    if (out.regularity.kind != RegularityKind::Complete) {
        for (auto [value, count] : mu_spectrum(g))
            out.mu_support.insert(value);
        if (out.mu_support != construction_mu_support(e))
            out.failures.push_back("mu-support differs from expected");
    }
    return out;
}

void check_clique(const Graph& g, const VertexSet& clique, TheoremCheck& out)
{
    if (!is_clique(g, clique) || clique.size() != static_cast<std::size_t>(out.expected.s)) {
        out.failures.push_back("regular clique: not a clique of size " + std::to_string(out.expected.s));
        return;
    }
    auto m = nexus(g, clique);
    if (!m || static_cast<std::int64_t>(*m) != out.expected.m)
        out.failures.push_back("regular clique: nexus is not " + std::to_string(out.expected.m));
}

} // namespace

TheoremCheck check_construction_theorem(const Graph& g, int e, const VertexSet& clique)
{
    auto out = check_common(g, e);
    if (g.order() == static_cast<std::size_t>(out.expected.v))
        check_clique(g, clique, out);
    return out;
}

TheoremCheck check_construction_theorem(const Graph& g, int e)
{
    auto out = check_common(g, e);
    if (g.order() != static_cast<std::size_t>(out.expected.v))
        return out;
    for (const auto& c : maximum_cliques(g))
        if (c.size() == static_cast<std::size_t>(out.expected.s)) {
            auto m = nexus(g, c);
            if (m && static_cast<std::int64_t>(*m) == out.expected.m)
                return out;
        }
    out.failures.push_back("regular clique: no " + std::to_string(out.expected.m) + "-regular " +
                           std::to_string(out.expected.s) + "-clique");
    return out;
}

TheoremCheck check_construction_theorem(const Construction& c)
{
    return check_construction_theorem(c.graph, c.e, c.regular_clique);
}

ExplorationResult explore_switchings(const Graph& g, int depth, unsigned threads)
{
    if (depth < 1)
        throw std::invalid_argument("exploration depth must be at least 1");
    const auto base = classify_regularity(g);
    if (!base.is_edge_regular())
        throw std::invalid_argument("exploration needs an edge-regular graph");
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());

    ExplorationResult result;
    std::map<std::vector<std::uint64_t>, Graph> seen;
    std::map<std::vector<std::uint64_t>, Graph> strict;
    auto start = canonical_form(g);
    seen.emplace(start.certificate(), start.graph);
    std::vector<Graph> frontier{start.graph};

    struct Outcome {
        bool kept = false;
        std::vector<std::uint64_t> key;
        Graph graph{1};
    };

    for (int level = 0; level < depth; ++level) {
        std::vector<Graph> next;
        for (const auto& h : frontier) {
            ++result.stats.graphs_expanded;
            auto cliques = regular_cliques(h);
            std::vector<SwitchingStep> steps;
            for (std::size_t i = 0; i < cliques.size(); ++i)
                for (std::size_t j = i + 1; j < cliques.size(); ++j) {
                    const auto& a = cliques[i].members;
                    const auto& b = cliques[j].members;
                    VertexSet common;
                    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                    if (!common.empty())
                        continue;
                    SwitchingStep step{a, b};
                    if (is_half_adjacent(h, step))
                        steps.push_back(std::move(step));
                }
            result.stats.candidate_pairs += steps.size();

            std::vector<Outcome> outcomes(steps.size());
            std::atomic<std::size_t> cursor{0};
            auto worker = [&] {
                for (auto i = cursor++; i < steps.size(); i = cursor++) {
                    auto switched = switch_edges(h, steps[i]);
                    auto reg = classify_regularity(switched);
                    if (!reg.is_edge_regular() || reg.erg() != base.erg())
                        continue;
                    auto cf = canonical_form(switched);
                    outcomes[i] = Outcome{true, cf.certificate(), std::move(cf.graph)};
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t + 1 < threads; ++t)
                pool.emplace_back(worker);
            worker();
            for (auto& t : pool)
                t.join();

            for (auto& o : outcomes) {
                if (!o.kept)
                    continue;
                ++result.stats.edge_regular_results;
                if (seen.count(o.key))
                    continue;
                seen.emplace(o.key, o.graph);
                if (!classify_regularity(o.graph).is_strongly_regular() && !regular_cliques(o.graph).empty())
                    strict.emplace(o.key, o.graph);
                next.push_back(std::move(o.graph));
            }
        }
        frontier = std::move(next);
    }

    for (auto& [key, graph] : strict)
        result.strictly_neumaier.push_back(std::move(graph));
    return result;
}

} // namespace neumaier
