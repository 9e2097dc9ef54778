#pragma once

#include "neumaier/cliques.hpp"
#include "neumaier/graph.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace neumaier {

/// A vector (x1,...,x_2e) over GF(2), stored with x_i in bit i-1.
///
/// In the 2 x e matrix view, column j holds x_{2j-1} on top and x_{2j} at the
/// bottom, so top(j) is bit 2j-2 and bottom(j) is bit 2j-1.
struct GF2Point {
    std::uint64_t coords = 0;
    int e = 0;

    GF2Point() = default;
    GF2Point(std::uint64_t bits, int half_dim);

    static GF2Point from_coords(std::span<const int> xs);

    bool coord(int i) const { return (coords >> (i - 1)) & 1u; }
    bool top(int column) const { return coord(2 * column - 1); }
    bool bottom(int column) const { return coord(2 * column); }

    GF2Point operator+(const GF2Point& other) const;
    bool operator==(const GF2Point&) const = default;
};

/// Q(x) = x1x2 + x3x4 + ... + x_{2e-1}x_{2e}.
int quadratic_form(const GF2Point& p);
int quadratic_form(std::uint64_t bits);

/// Polar form B(x,y) = Q(x+y) + Q(x) + Q(y).
int bilinear_form(const GF2Point& a, const GF2Point& b);

/// Linear span over GF(2) of independent vectors.
class Subspace {
public:
    /// Throws std::invalid_argument if the vectors are dependent or have
    /// mismatched dimension.
    Subspace(int e, std::vector<GF2Point> basis);

    int e() const { return e_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<GF2Point>& basis() const { return basis_; }

    /// All 2^dim elements, sorted.
    const std::vector<std::uint64_t>& elements() const { return elements_; }
    bool contains(std::uint64_t x) const;
    bool is_totally_singular() const;
    bool is_generator() const { return dim() == e_ && is_totally_singular(); }

    bool operator==(const Subspace& other) const { return e_ == other.e_ && elements_ == other.elements_; }

private:
    int e_;
    std::vector<GF2Point> basis_;
    std::vector<std::uint64_t> elements_;
};

/// VO+(2e,2) on vertices 0..2^{2e}-1, vertex x being the little-endian
/// integer value of its coordinate vector. Throws std::invalid_argument for
/// e < 2 or when 2^{2e} exceeds the vertex cap.
Graph build_vo_plus(int e);

/// The two generators through a totally singular (e-1)-space, ordered by
/// their smallest element outside W.
std::pair<Subspace, Subspace> generators_containing(const Subspace& w);

/// shift + U as a clique of the affine polar graph g.
CliqueInfo coset_clique(const Graph& g, const Subspace& u, const GF2Point& shift);

/// The 2^e cosets of U, ordered by smallest member.
std::vector<CliqueInfo> spread(const Graph& g, const Subspace& u);

/// Points matching a matrix pattern. Each row string has e characters, one
/// per column: '0' or '1' fixes the entry, '*' leaves it free. Sorted.
VertexSet pattern_set(std::string_view top, std::string_view bottom);

/// The subspace spanned by the free entries of a pattern with no '1'.
Subspace pattern_subspace(std::string_view top, std::string_view bottom);

/// The point whose matrix entries are given by two strings of '0'/'1'.
GF2Point pattern_point(std::string_view top, std::string_view bottom);

} // namespace neumaier
