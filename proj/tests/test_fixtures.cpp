#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "neumaier/affine_polar.hpp"
#include "neumaier/cliques.hpp"
#include "neumaier/fixtures.hpp"
#include "neumaier/iso.hpp"
#include "neumaier/report.hpp"
#include "neumaier/switching.hpp"

#include <set>

using namespace neumaier;

TEST_CASE("labels")
{
    CHECK(label_to_vertex("00/00") == 0);
    CHECK(label_to_vertex("10/00") == 1);
    CHECK(label_to_vertex("00/10") == 2);
    CHECK(label_to_vertex("01/00") == 4);
    CHECK(label_to_vertex("00/01") == 8);
    CHECK(label_to_vertex("11/11") == 15);
    CHECK_THROWS_AS(label_to_vertex("1/00"), std::invalid_argument);
    CHECK_THROWS_AS(label_to_vertex("12/00"), std::invalid_argument);
}

TEST_CASE("fixtures load with distinct labels and the expected degrees")
{
    for (const auto& name : fixture_names()) {
        INFO(name);
        auto f = load_fixture(name);
        CHECK(f.graph.order() == 16);
        CHECK(std::set<Vertex>(f.order.begin(), f.order.end()).size() == 16);
        for (Vertex u = 0; u < 16; ++u)
            CHECK(f.graph.degree(u) == 9);
        CHECK(f.fixture.checksum == fnv1a64([&] {
                  std::string all;
                  for (const auto& r : f.fixture.rows)
                      all += r;
                  return all;
              }()));
    }
    CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);
    CHECK_THROWS_AS(load_fixture("nope"), std::invalid_argument);
}

TEST_CASE("fixture classifications")
{
    CHECK(classify_regularity(load_fixture("A2").graph).srg() == SrgParams{16, 9, 4, 6});

    auto a21 = load_fixture("A21").graph;
    auto report = verify(a21);
    CHECK(report.kind == NeumaierKind::StrictlyNeumaier);
    CHECK(report.params == NeumaierParams{16, 9, 4, 2, 4});
    CHECK(report.mu_support == std::set<std::size_t>{4, 6, 8});

    CHECK(is_isomorphic(load_fixture("B22").graph, a21));
    CHECK(is_vertex_transitive(a21));
}

TEST_CASE("fixtures equal the constructions in their printed order")
{
    CHECK(load_fixture("A2").in_vertex_order() == build_vo_plus(2));
    CHECK(load_fixture("A21").in_vertex_order() == construct_gamma1(2).graph);
    CHECK(load_fixture("B22").in_vertex_order() == construct_gamma2(2).graph);
    for (const auto& c : check_fixtures()) {
        INFO(c.name);
        CHECK(c.matches);
        CHECK(c.differing_pairs == 0);
    }
}

TEST_CASE("the duplicated label is recorded as a positional correction")
{
    const auto& a21 = fixture("A21");
    REQUIRE(a21.corrections.size() == 1);
    CHECK(a21.corrections[0].printed == "11/01");
    CHECK(a21.corrections[0].corrected == "11/10");
    CHECK(a21.labels[a21.corrections[0].position] == "11/10");
}

TEST_CASE("json reports")
{
    auto j = to_json(verify(construct_gamma1(2).graph));
    CHECK(j["schema"] == report_schema);
    CHECK(j["kind"] == "StrictlyNeumaier");
    auto gj = graph_json(build_vo_plus(2));
    CHECK(gj["order"] == 16);
    CHECK(gj["edges"].size() == 72);
}
