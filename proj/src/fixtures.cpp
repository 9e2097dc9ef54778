#include "neumaier/fixtures.hpp"

#include "neumaier/affine_polar.hpp"
#include "neumaier/switching.hpp"

#include <algorithm>
#include <stdexcept>

namespace neumaier {

namespace {

const std::vector<Fixture>& all_fixtures()
{
    static const std::vector<Fixture> fixtures = {
    Fixture{
        "A2",
        "VO+(4,2) in the first vertex order",
        {"01/00", "11/00", "00/00", "10/00", "00/01", "10/01", "01/10", "11/10", "00/10", "10/10", "00/11", "10/11", "01/01", "11/01", "01/11", "11/11"},
        {{7, "11/01", "11/10"}},
        {
            "0111001010011110",
            "1011000101101101",
            "1101111010100001",
            "1110110101010010",
            "0011010110101110",
            "0011101001011101",
            "1010010111001011",
            "0101101011000111",
            "1010101101110100",
            "0101011110111000",
            "0110100011011011",
            "1001010011100111",
            "1100111001100110",
            "1100110110011001",
            "1001101100111001",
            "0110011100110110",
        },
        0x869452326bbc4ff5ull,
    },
    Fixture{
        "A21",
        "Gamma_{2,1} in the first vertex order",
        {"01/00", "11/00", "00/00", "10/00", "00/01", "10/01", "01/10", "11/10", "00/10", "10/10", "00/11", "10/11", "01/01", "11/01", "01/11", "11/11"},
        {{7, "11/01", "11/10"}},
        {
            "0111000101011110",
            "1011001010101101",
            "1101110110010001",
            "1110111001100010",
            "0011010101011110",
            "0011101010101101",
            "0101010111001011",
            "1010101011000111",
            "0110011101110100",
            "1001101110111000",
            "0101010011011011",
            "1010100011100111",
            "1100111001100110",
            "1100110110011001",
            "1001101100111001",
            "0110011100110110",
        },
        0xe9dbf04f7f670fd5ull,
    },
    Fixture{
        "B2",
        "VO+(4,2) in the second vertex order",
        {"00/00", "10/00", "01/00", "11/00", "00/01", "10/01", "01/01", "11/01", "00/10", "10/10", "00/11", "10/11", "01/10", "11/10", "01/11", "11/11"},
        {},
        {
            "0111110010101001",
            "1011110001010110",
            "1101001110011010",
            "1110001101100101",
            "1100011110100110",
            "1100101101011001",
            "0011110101101010",
            "0011111010010101",
            "1010100101111100",
            "0101011010111100",
            "1001101011010011",
            "0110010111100011",
            "1010011011000111",
            "0101100111001011",
            "0110101000111101",
            "1001010100111110",
        },
        0x213383162ce7b1f5ull,
    },
    Fixture{
        "B22",
        "Gamma_{2,2} in the second vertex order",
        {"00/00", "10/00", "01/00", "11/00", "00/01", "10/01", "01/01", "11/01", "00/10", "10/10", "00/11", "10/11", "01/10", "11/10", "01/11", "11/11"},
        {},
        {
            "0111001110101001",
            "1011001101010110",
            "1101110001101010",
            "1110110010010101",
            "0011011101010110",
            "0011101110101001",
            "1100110101101010",
            "1100111010010101",
            "1001010101111100",
            "0110101010111100",
            "1010011011010011",
            "0101100111100011",
            "1010011011000111",
            "0101100111001011",
            "0110101000111101",
            "1001010100111110",
        },
        0x6786dd040bfd5475ull,
    },    };
    return fixtures;
}

} // namespace

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& f : all_fixtures())
            out.push_back(f.name);
        return out;
    }();
    return names;
}

const Fixture& fixture(std::string_view name)
{
    for (const auto& f : all_fixtures())
        if (f.name == name)
            return f;
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

Vertex label_to_vertex(std::string_view label)
{
    auto is_bit = [](char c) { return c == '0' || c == '1'; };
    if (label.size() != 5 || label[2] != '/' || !is_bit(label[0]) || !is_bit(label[1]) || !is_bit(label[3]) ||
        !is_bit(label[4]))
        throw std::invalid_argument("malformed label '" + std::string(label) + "'");
    const char top[] = {label[0], label[1], 0};
    const char bottom[] = {label[3], label[4], 0};
    return static_cast<Vertex>(pattern_point(top, bottom).coords);
}

LoadedFixture load_fixture(std::string_view name)
{
    LoadedFixture out;
    out.fixture = fixture(name);
    const auto& f = out.fixture;
    auto fail = [&](const std::string& what) { throw std::runtime_error("fixture " + f.name + ": " + what); };

    std::string joined;
    for (const auto& r : f.rows)
        joined += r;
    if (fnv1a64(joined) != f.checksum)
        fail("checksum mismatch");

    const auto n = f.rows.size();
    if (f.labels.size() != n)
        fail("label count differs from matrix size");
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f.rows[i].size() != n)
            fail("row " + std::to_string(i) + " has the wrong length");
        if (f.rows[i][i] != '0')
            fail("nonzero diagonal at " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (f.rows[i][j] != f.rows[j][i])
                fail("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (j > i && f.rows[i][j] == '1')
                b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    out.graph = std::move(b).build();

    for (const auto& label : f.labels)
        out.order.push_back(label_to_vertex(label));
    auto sorted = out.order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("labels are not distinct");
    return out;
}

std::vector<FixtureComparison> check_fixtures()
{
    struct Target {
        const char* fixture;
        const char* construction;
        Graph graph;
    };
    const std::vector<Target> targets = {
        {"A2", "voplus e=2", build_vo_plus(2)},
        {"A21", "gamma1 e=2", construct_gamma1(2).graph},
        {"B2", "voplus e=2", build_vo_plus(2)},
        {"B22", "gamma2 e=2 PrimePrime", construct_gamma2(2, Gamma2Variant::PrimePrime).graph},
    };
    std::vector<FixtureComparison> out;
    for (const auto& t : targets) {
        auto g = load_fixture(t.fixture).in_vertex_order();
        FixtureComparison c{t.fixture, t.construction, false, 0};
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex w = u + 1; w < g.order(); ++w)
                c.differing_pairs += g.adjacent(u, w) != t.graph.adjacent(u, w);
        c.matches = c.differing_pairs == 0;
        out.push_back(c);
    }
    return out;
}

} // namespace neumaier
