#pragma once

#include "neumaier/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace neumaier {

/// A header label that had to be changed to make the labels distinct.
struct LabelCorrection {
    std::size_t position;
    std::string printed;
    std::string corrected;
};

/// A 16 x 16 adjacency matrix transcribed together with its header labels.
///
/// A label "ab/cd" names the 2 x 2 matrix with top row a b and bottom row
/// c d, i.e. the point (x1,x2,x3,x4) = (a,c,b,d).
struct Fixture {
    std::string name;
    std::string description;
    std::vector<std::string> labels;
    std::vector<LabelCorrection> corrections;
    std::vector<std::string> rows;
    std::uint64_t checksum;
};

std::uint64_t fnv1a64(std::string_view data);

const std::vector<std::string>& fixture_names();

/// Throws std::invalid_argument for an unknown name.
const Fixture& fixture(std::string_view name);

/// Vertex index of a label "ab/cd" in VO+(4,2).
Vertex label_to_vertex(std::string_view label);

struct LoadedFixture {
    Fixture fixture;
    /// Vertex i is the i-th row of the matrix.
    Graph graph{1};
    /// order[i] is the VO+(4,2) vertex named by label i.
    std::vector<Vertex> order;

    /// The matrix with rows renamed to VO+(4,2) vertex indices.
    Graph in_vertex_order() const { return graph.relabeled(order); }
};

/// Parses and validates a fixture: checksum, symmetry, empty diagonal and
/// distinct labels. Throws std::invalid_argument for an unknown name and
/// std::runtime_error for a corrupted fixture.
LoadedFixture load_fixture(std::string_view name);

struct FixtureComparison {
    std::string name;
    std::string construction;
    bool matches = false;
    std::size_t differing_pairs = 0;
};

/// Compares each fixture with the construction it depicts, through the
/// fixture's label order.
std::vector<FixtureComparison> check_fixtures();

} // namespace neumaier
