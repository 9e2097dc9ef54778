#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "neumaier/affine_polar.hpp"
#include "neumaier/cliques.hpp"

#include <bit>
#include <set>

using namespace neumaier;

TEST_CASE("quadratic form values")
{
    CHECK(quadratic_form(GF2Point(0, 2)) == 0);
    std::vector<int> a{1, 1, 0, 0}, b{1, 0, 1, 0};
    CHECK(quadratic_form(GF2Point::from_coords(a)) == 1);
    CHECK(quadratic_form(GF2Point::from_coords(b)) == 0);
    CHECK_THROWS_AS(GF2Point(16, 2), std::invalid_argument);
    std::vector<int> odd{1, 0, 1};
    CHECK_THROWS_AS(GF2Point::from_coords(odd), std::invalid_argument);
}

TEST_CASE("polar form is bilinear and matches the pairing formula")
{
    for (int e = 1; e <= 3; ++e) {
        const std::uint64_t n = std::uint64_t{1} << (2 * e);
        for (std::uint64_t x = 0; x < n; ++x)
            for (std::uint64_t y = 0; y < n; ++y) {
                GF2Point px(x, e), py(y, e);
                int expected = 0;
                for (int j = 1; j <= e; ++j)
                    expected ^= (px.top(j) & py.bottom(j)) ^ (px.bottom(j) & py.top(j));
                CHECK(bilinear_form(px, py) == expected);
                CHECK(quadratic_form(px + py) == (quadratic_form(px) ^ quadratic_form(py) ^ expected));
            }
    }
}

TEST_CASE("singular vector counts")
{
    for (int e = 2; e <= 4; ++e) {
        std::uint64_t singular = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * e)); ++x)
            singular += quadratic_form(x) == 0;
        CHECK(singular == (std::uint64_t{1} << (2 * e - 1)) + (std::uint64_t{1} << (e - 1)));
    }
}

TEST_CASE("affine polar graph parameters and translations")
{
    for (int e = 2; e <= 3; ++e) {
        auto g = build_vo_plus(e);
        const Vertex n = static_cast<Vertex>(g.order());
        const std::int64_t q = std::int64_t{1} << (e - 1);
        auto reg = classify_regularity(g);
        CHECK(reg.kind == RegularityKind::StronglyRegular);
        CHECK(reg.k == (2 * q - 1) * (q + 1));
        CHECK(reg.lambda == (q + 2) * (q - 1));
        CHECK(reg.mu == q * (q + 1));
        for (Vertex t : {Vertex{1}, Vertex{5}, n - 1}) {
            std::vector<Vertex> shift(n);
            for (Vertex u = 0; u < n; ++u)
                shift[u] = u ^ t;
            CHECK(g.relabeled(shift) == g);
        }
    }
    CHECK_THROWS_AS(build_vo_plus(1), std::invalid_argument);
}

TEST_CASE("subspaces")
{
    Subspace w(2, {GF2Point(0b0001, 2), GF2Point(0b0100, 2)});
    CHECK(w.elements() == std::vector<std::uint64_t>{0, 1, 4, 5});
    CHECK(w.is_generator());
    CHECK(w.contains(5));
    CHECK_FALSE(w.contains(2));
    CHECK_THROWS_AS(Subspace(2, {GF2Point(1, 2), GF2Point(1, 2)}), std::invalid_argument);
    CHECK_FALSE(Subspace(2, {GF2Point(0b0011, 2)}).is_totally_singular());
}

TEST_CASE("generators through a totally singular subspace")
{
    Subspace w(2, {GF2Point(0b0001, 2)});
    auto [w1, w2] = generators_containing(w);
    CHECK(w1 == Subspace(2, {GF2Point(0b0001, 2), GF2Point(0b0100, 2)}));
    CHECK(w2 == Subspace(2, {GF2Point(0b0001, 2), GF2Point(0b1000, 2)}));

    auto w3 = pattern_subspace("**0", "000");
    auto [a, b] = generators_containing(w3);
    CHECK(a == pattern_subspace("***", "000"));
    CHECK(b == pattern_subspace("**0", "00*"));

    for (int e = 2; e <= 4; ++e) {
        std::string top(e, '*'), bottom(e, '0');
        top.back() = '0';
        auto base = pattern_subspace(top, bottom);
        auto [g1, g2] = generators_containing(base);
        for (const auto& g : {g1, g2}) {
            CHECK(g.is_generator());
            for (auto x : base.elements())
                CHECK(g.contains(x));
        }
        CHECK_FALSE(g1 == g2);
    }
    CHECK_THROWS_AS(generators_containing(Subspace(2, {GF2Point(0b0011, 2)})), std::invalid_argument);
}

TEST_CASE("coset cliques and spreads")
{
    auto g2 = build_vo_plus(2);
    auto w1 = pattern_subspace("**", "00");
    auto c = coset_clique(g2, w1, GF2Point(0, 2));
    CHECK(c.size == 4);
    CHECK(c.nexus == std::size_t{2});
    auto shifted = coset_clique(g2, w1, pattern_point("00", "01"));
    CHECK(shifted.members == pattern_set("**", "01"));

    auto spread2 = spread(g2, w1);
    CHECK(spread2.size() == 4);
    std::set<Vertex> covered;
    for (const auto& s : spread2)
        covered.insert(s.members.begin(), s.members.end());
    CHECK(covered.size() == 16);

    auto g3 = build_vo_plus(3);
    auto w3 = pattern_subspace("***", "000");
    auto c3 = coset_clique(g3, w3, GF2Point(0, 3));
    CHECK(c3.size == 8);
    CHECK(c3.nexus == std::size_t{4});
    auto spread3 = spread(g3, w3);
    CHECK(spread3.size() == 8);
    std::set<Vertex> covered3;
    for (const auto& s : spread3)
        covered3.insert(s.members.begin(), s.members.end());
    CHECK(covered3.size() == 64);

    CHECK_THROWS_AS(coset_clique(g2, Subspace(2, {GF2Point(1, 2)}), GF2Point(0, 2)), std::invalid_argument);
}

TEST_CASE("patterns")
{
    CHECK(pattern_set("*1", "00") == VertexSet{4, 5});
    CHECK(pattern_point("10", "01").coords == 0b1001);
    CHECK_THROWS_AS(pattern_set("*", "00"), std::invalid_argument);
    CHECK_THROWS_AS(pattern_subspace("*1", "00"), std::invalid_argument);
    CHECK_THROWS_AS(pattern_point("*0", "00"), std::invalid_argument);
}
