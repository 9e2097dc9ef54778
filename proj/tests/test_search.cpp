#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "neumaier/cliques.hpp"
#include "neumaier/iso.hpp"
#include "neumaier/params.hpp"
#include "neumaier/search.hpp"
#include "neumaier/switching.hpp"

#include <map>

using namespace neumaier;

namespace {

// Every graph with seed clique {0..s-1} whose outside vertex i attaches to
// attach[i], over all 2^C(v-s,2) choices of the outside edges, kept when it
// is edge-regular with the given parameters and the seed is m-regular.
std::vector<Graph> brute_completions(const NeumaierParams& p, const std::vector<std::vector<Vertex>>& attach)
{
    const auto v = static_cast<Vertex>(p.v), s = static_cast<Vertex>(p.s);
    std::vector<std::pair<Vertex, Vertex>> free_pairs;
    for (Vertex u = s; u < v; ++u)
        for (Vertex w = u + 1; w < v; ++w)
            free_pairs.emplace_back(u, w);
    std::map<std::vector<std::uint64_t>, Graph> classes;
    VertexSet seed;
    for (Vertex a = 0; a < s; ++a)
        seed.push_back(a);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pairs.size()); ++mask) {
        GraphBuilder b(v);
        for (Vertex a = 0; a < s; ++a)
            for (Vertex c = a + 1; c < s; ++c)
                b.add_edge(a, c);
        for (std::size_t i = 0; i < attach.size(); ++i)
            for (auto a : attach[i])
                b.add_edge(a, s + static_cast<Vertex>(i));
        for (std::size_t j = 0; j < free_pairs.size(); ++j)
            if (mask >> j & 1u)
                b.add_edge(free_pairs[j].first, free_pairs[j].second);
        const auto& g = b.view();
        auto reg = classify_regularity(g);
        if (!reg.is_edge_regular() || reg.erg() != p.erg())
            continue;
        if (nexus(g, seed) != static_cast<std::size_t>(p.m))
            continue;
        auto form = canonical_form(g);
        classes.emplace(form.certificate(), form.graph);
    }
    std::vector<Graph> out;
    for (auto& [cert, g] : classes)
        out.push_back(g);
    return out;
}

SearchResult run(const NeumaierParams& p, bool strict, bool symmetry = true)
{
    SearchSpec spec;
    spec.params = p;
    spec.strict = strict;
    spec.symmetry_breaking = symmetry;
    return search_ng(spec);
}

} // namespace

TEST_CASE("search on 10 vertices matches brute-force completion")
{
    NeumaierParams p{10, 6, 3, 2, 4};
    // One outside vertex per pair of seed vertices.
    auto oracle = brute_completions(p, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto res = run(p, false);
    CHECK(res.exhaustive);
    REQUIRE(res.representatives.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
        CHECK(res.representatives[i] == oracle[i]);
    REQUIRE(oracle.size() == 1);
    CHECK(is_isomorphic(oracle[0], generate_named(family::Triangular{5})));
    CHECK(run(p, true).representatives.empty());
}

TEST_CASE("search on 9 vertices matches brute-force completion")
{
    NeumaierParams p{9, 4, 1, 1, 3};
    auto oracle = brute_completions(p, {{0}, {0}, {1}, {1}, {2}, {2}});
    auto res = run(p, false);
    CHECK(res.exhaustive);
    REQUIRE(res.representatives.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
        CHECK(res.representatives[i] == oracle[i]);
    CHECK(oracle.size() == 1);

    SearchSpec first;
    first.params = p;
    first.mode = SearchMode::FirstFound;
    auto strict = search_ng(first);
    CHECK(strict.representatives.empty());
    CHECK(strict.exhaustive);
}

TEST_CASE("symmetry breaking does not lose classes")
{
    for (auto p : {NeumaierParams{10, 6, 3, 2, 4}, NeumaierParams{9, 4, 1, 1, 3}, NeumaierParams{16, 9, 4, 2, 4},
                   NeumaierParams{16, 6, 2, 1, 4}}) {
        INFO(to_string(p));
        auto with = run(p, false, true);
        auto without = run(p, false, false);
        CHECK(with.exhaustive);
        CHECK(without.exhaustive);
        CHECK(with.representatives == without.representatives);
        CHECK(with.stats.nodes <= without.stats.nodes);
    }
}

TEST_CASE("the 16-vertex strictly Neumaier graph is unique")
{
    auto res = run({16, 9, 4, 2, 4}, true);
    CHECK(res.exhaustive);
    REQUIRE(res.representatives.size() == 1);
    CHECK(is_isomorphic(res.representatives[0], construct_gamma1(2).graph));
    CHECK(verify_search_output(res));

    auto all = run({16, 9, 4, 2, 4}, false);
    CHECK(all.representatives.size() > 1);
    for (const auto& g : all.representatives)
        CHECK(verify(g).params == NeumaierParams{16, 9, 4, 2, 4});
}

TEST_CASE("output verification rejects duplicates and corrupted graphs")
{
    auto res = run({16, 9, 4, 2, 4}, true);
    REQUIRE(verify_search_output(res));

    auto duplicated = res;
    duplicated.representatives.push_back(res.representatives[0].relabeled(canonical_form(res.representatives[0]).labeling));
    CHECK_FALSE(verify_search_output(duplicated));

    auto corrupted = res;
    GraphBuilder b(corrupted.representatives[0]);
    b.toggle_edge(0, 15);
    corrupted.representatives[0] = b.build();
    CHECK_FALSE(verify_search_output(corrupted));

    auto srg = run({16, 9, 4, 2, 4}, false);
    CHECK(verify_search_output(srg));
    auto mislabeled = srg;
    mislabeled.spec.strict = true;
    CHECK_FALSE(verify_search_output(mislabeled));
}

TEST_CASE("budgets and errors")
{
    SearchSpec tight;
    tight.params = {16, 9, 4, 2, 4};
    tight.budget_nodes = 100;
    auto res = search_ng(tight);
    CHECK_FALSE(res.exhaustive);
    CHECK(res.stats.nodes <= 101);

    SearchSpec bad;
    bad.params = {16, 9, 4, 3, 4};
    CHECK_THROWS_AS(search_ng(bad), std::invalid_argument);
    for (const auto& r : enumerate_feasible(70))
        if (r.params.v > 64) {
            bad.params = r.params;
            CHECK_THROWS_AS(search_ng(bad), std::invalid_argument);
            break;
        }
}

TEST_CASE("empty parameter sets")
{
    auto res = run({21, 14, 9, 4, 7}, true);
    CHECK(res.exhaustive);
    CHECK(res.representatives.empty());
}
