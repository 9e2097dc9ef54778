#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "neumaier/affine_polar.hpp"
#include "neumaier/cliques.hpp"
#include "neumaier/iso.hpp"
#include "neumaier/switching.hpp"
#include "support.hpp"

#include <algorithm>

using namespace neumaier;

namespace {

std::vector<Construction> constructions(int max_e)
{
    std::vector<Construction> out;
    for (int e = 2; e <= max_e; ++e) {
        out.push_back(construct_gamma1(e));
        out.push_back(construct_gamma2(e, Gamma2Variant::PrimePrime));
        out.push_back(construct_gamma2(e, Gamma2Variant::PrimePrimePrime));
    }
    return out;
}

bool contains(const VertexSet& set, Vertex u) { return std::binary_search(set.begin(), set.end(), u); }

} // namespace

TEST_CASE("switching a single vertex complements its neighbourhood")
{
    auto g = test::petersen();
    VertexSet rest;
    for (Vertex u = 1; u < 10; ++u)
        rest.push_back(u);
    auto h = switch_edges(g, {{0}, rest});
    for (Vertex u = 1; u < 10; ++u)
        CHECK(h.adjacent(0, u) != g.adjacent(0, u));
    for (Vertex u = 1; u < 10; ++u)
        for (Vertex w = u + 1; w < 10; ++w)
            CHECK(h.adjacent(u, w) == g.adjacent(u, w));

    CHECK_THROWS_AS(switch_edges(g, {{}, rest}), std::invalid_argument);
    CHECK_THROWS_AS(switch_edges(g, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("switching is an involution")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        auto g = test::random_graph(14, 0.5, rng);
        auto perm = test::random_permutation(14, rng);
        SwitchingStep step{{perm[0], perm[1], perm[2]}, {perm[5], perm[6], perm[7], perm[8]}};
        std::sort(step.side_a.begin(), step.side_a.end());
        std::sort(step.side_b.begin(), step.side_b.end());
        CHECK(switch_edges(switch_edges(g, step), step) == g);
    }
}

TEST_CASE("construction steps are half-adjacent and preserve degrees")
{
    for (const auto& c : constructions(4)) {
        Graph current = c.base;
        for (const auto& step : c.steps) {
            CHECK(is_half_adjacent(current, step));
            auto next = switch_edges(current, step);
            CHECK(degree_sequence(next) == degree_sequence(current));
            CHECK(switch_edges(next, step) == current);
            current = next;
        }
        CHECK(current == c.graph);
    }
}

TEST_CASE("switched edges stay inside the delta subgraph")
{
    for (const auto& c : constructions(4)) {
        CHECK(c.delta == pattern_set(std::string(c.e, '*'), std::string(c.e - 2, '0') + "**"));
        const auto n = static_cast<Vertex>(c.graph.order());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = u + 1; w < n; ++w)
                if (c.graph.adjacent(u, w) != c.base.adjacent(u, w)) {
                    CHECK(contains(c.delta, u));
                    CHECK(contains(c.delta, w));
                }
    }
}

TEST_CASE("regular cliques of a Neumaier graph share one nexus and size")
{
    std::vector<Graph> graphs;
    for (int e = 2; e <= 3; ++e)
        graphs.push_back(build_vo_plus(e));
    for (const auto& c : constructions(3))
        graphs.push_back(c.graph);
    graphs.push_back(single_switch_gamma(2));
    for (const auto& g : graphs) {
        auto report = verify(g);
        REQUIRE(report.kind != NeumaierKind::NotNeumaier);
        for (const auto& c : report.regular_cliques) {
            CHECK(static_cast<std::int64_t>(c.size) == report.params->s);
            CHECK(static_cast<std::int64_t>(*c.nexus) == report.params->m);
        }
    }
}

TEST_CASE("the recorded regular clique is regular")
{
    for (const auto& c : constructions(4)) {
        const std::size_t q = std::size_t{1} << (c.e - 1);
        CHECK(is_clique(c.graph, c.regular_clique));
        CHECK(c.regular_clique.size() == 2 * q);
        CHECK(nexus(c.graph, c.regular_clique) == q);
    }
}

TEST_CASE("construction theorem")
{
    for (const auto& c : constructions(3)) {
        auto check = check_construction_theorem(c);
        INFO(c.e, " ", check.failures.size());
        CHECK(check.passed());
        CHECK(check.mu_support == construction_mu_support(c.e));
    }
    CHECK(construction_params(3) == NeumaierParams{64, 35, 18, 4, 8});
    CHECK(construction_mu_support(2) == std::set<std::size_t>{4, 6, 8});

    auto from_search = check_construction_theorem(construct_gamma2(3).graph, 3);
    CHECK(from_search.passed());

    auto vo = check_construction_theorem(build_vo_plus(2), 2);
    CHECK_FALSE(vo.passed());
    CHECK(std::find(vo.failures.begin(), vo.failures.end(), "strongly regular") != vo.failures.end());

    auto wrong_e = check_construction_theorem(construct_gamma1(2).graph, 3);
    CHECK_FALSE(wrong_e.passed());
}

TEST_CASE("construction output for e = 2 and e = 3")
{
    auto g21 = verify(construct_gamma1(2).graph);
    CHECK(g21.kind == NeumaierKind::StrictlyNeumaier);
    CHECK(g21.params == NeumaierParams{16, 9, 4, 2, 4});

    auto g31 = verify(construct_gamma1(3).graph);
    CHECK(g31.kind == NeumaierKind::StrictlyNeumaier);
    CHECK(g31.params == NeumaierParams{64, 35, 18, 4, 8});
    CHECK(g31.mu_support == std::set<std::size_t>{16, 20, 24});

    auto g32 = verify(construct_gamma2(3).graph);
    CHECK(g32.kind == NeumaierKind::StrictlyNeumaier);
    CHECK(g32.params == NeumaierParams{64, 35, 18, 4, 8});

    CHECK_THROWS_AS(construct_gamma1(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_gamma2(7), std::invalid_argument);
}

TEST_CASE("a single switching gives another strongly regular graph")
{
    auto g = single_switch_gamma(2);
    CHECK(classify_regularity(g).srg() == SrgParams{16, 9, 4, 6});
    CHECK_FALSE(is_isomorphic(g, build_vo_plus(2)));
    CHECK(is_isomorphic(g, complement(generate_named(family::Shrikhande{}))));
}

TEST_CASE("exploration at e = 2")
{
    auto res = explore_switchings(build_vo_plus(2), 1);
    CHECK(res.stats.graphs_expanded == 1);
    CHECK(res.stats.candidate_pairs > 0);
    for (const auto& g : res.strictly_neumaier)
        CHECK(verify(g).kind == NeumaierKind::StrictlyNeumaier);

    auto twice = explore_switchings(build_vo_plus(2), 2, 1);
    auto parallel = explore_switchings(build_vo_plus(2), 2, 4);
    CHECK(twice.strictly_neumaier == parallel.strictly_neumaier);
    REQUIRE(twice.strictly_neumaier.size() == 1);
    CHECK(is_isomorphic(twice.strictly_neumaier[0], construct_gamma1(2).graph));

    CHECK_THROWS_AS(explore_switchings(build_vo_plus(2), 0), std::invalid_argument);
    GraphBuilder path(3);
    path.add_edge(0, 1).add_edge(1, 2);
    CHECK_THROWS_AS(explore_switchings(path.view(), 1), std::invalid_argument);
}
