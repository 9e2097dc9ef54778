#include "neumaier/affine_polar.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace neumaier {

namespace {

constexpr std::uint64_t odd_positions = 0x5555555555555555ull;

std::uint64_t dimension_mask(int e) { return e >= 32 ? ~0ull : (1ull << (2 * e)) - 1; }

int half_dimension_of(const Graph& g)
{
    const auto n = g.order();
    if (n < 16 || !std::has_single_bit(n) || std::countr_zero(n) % 2 != 0)
        throw std::invalid_argument("graph order is not 2^{2e} with e >= 2");
    return std::countr_zero(n) / 2;
}

struct PatternBits {
    std::uint64_t fixed_ones = 0;
    std::uint64_t free = 0;
    int e = 0;
};

PatternBits parse_pattern(std::string_view top, std::string_view bottom)
{
    if (top.size() != bottom.size() || top.empty() || top.size() > 31)
        throw std::invalid_argument("pattern rows must have the same nonzero length");
    PatternBits p;
    p.e = static_cast<int>(top.size());
    for (int row = 0; row < 2; ++row) {
        auto s = row == 0 ? top : bottom;
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto bit = 1ull << (2 * j + row);
            switch (s[j]) {
            case '0': break;
            case '1': p.fixed_ones |= bit; break;
            case '*': p.free |= bit; break;
            default: throw std::invalid_argument("pattern characters must be 0, 1 or *");
            }
        }
    }
    return p;
}

} // namespace

GF2Point::GF2Point(std::uint64_t bits, int half_dim) : coords(bits), e(half_dim)
{
    if (half_dim < 1 || half_dim > 31)
        throw std::invalid_argument("half-dimension out of range");
    if (bits & ~dimension_mask(half_dim))
        throw std::invalid_argument("point has bits beyond dimension 2e");
}

GF2Point GF2Point::from_coords(std::span<const int> xs)
{
    if (xs.empty() || xs.size() % 2 != 0)
        throw std::invalid_argument("coordinate vector must have even positive length");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] != 0 && xs[i] != 1)
            throw std::invalid_argument("coordinates must be 0 or 1");
        if (xs[i])
            bits |= 1ull << i;
    }
    return GF2Point(bits, static_cast<int>(xs.size() / 2));
}

GF2Point GF2Point::operator+(const GF2Point& other) const
{
    if (e != other.e)
        throw std::invalid_argument("dimension mismatch");
    return GF2Point(coords ^ other.coords, e);
}

int quadratic_form(std::uint64_t bits) { return std::popcount(bits & (bits >> 1) & odd_positions) & 1; }

int quadratic_form(const GF2Point& p) { return quadratic_form(p.coords); }

int bilinear_form(const GF2Point& a, const GF2Point& b)
{
    return quadratic_form(a.coords ^ b.coords) ^ quadratic_form(a) ^ quadratic_form(b);
}

Subspace::Subspace(int e, std::vector<GF2Point> basis) : e_(e), basis_(std::move(basis))
{
    elements_.push_back(0);
    for (const auto& b : basis_) {
        if (b.e != e)
            throw std::invalid_argument("basis vector has the wrong dimension");
        if (contains(b.coords))
            throw std::invalid_argument("basis vectors are linearly dependent");
        auto n = elements_.size();
        for (std::size_t i = 0; i < n; ++i)
            elements_.push_back(elements_[i] ^ b.coords);
        std::sort(elements_.begin(), elements_.end());
    }
}

bool Subspace::contains(std::uint64_t x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool Subspace::is_totally_singular() const
{
    return std::all_of(elements_.begin(), elements_.end(), [](auto x) { return quadratic_form(x) == 0; });
}

Graph build_vo_plus(int e)
{
    if (e < 2 || e > 15)
        throw std::invalid_argument("VO+(2e,2) needs 2 <= e <= 15");
    const std::size_t n = std::size_t{1} << (2 * e);
    if (n > max_vertices())
        throw std::invalid_argument("VO+(" + std::to_string(2 * e) + ",2) has " + std::to_string(n) +
                                    " vertices, over the vertex cap");
    GraphBuilder b(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            if (quadratic_form(x ^ y) == 0)
                b.add_edge(x, y);
    return std::move(b).build();
}

std::pair<Subspace, Subspace> generators_containing(const Subspace& w)
{
    const int e = w.e();
    if (w.dim() != e - 1)
        throw std::invalid_argument("subspace must have dimension e-1");
    if (!w.is_totally_singular())
        throw std::invalid_argument("subspace is not totally singular");

    std::vector<Subspace> found;
    for (std::uint64_t x = 0; x <= dimension_mask(e); ++x) {
        if (quadratic_form(x) != 0 || w.contains(x))
            continue;
        GF2Point p(x, e);
        bool orthogonal = std::all_of(w.basis().begin(), w.basis().end(),
                                      [&](const GF2Point& b) { return bilinear_form(p, b) == 0; });
        if (!orthogonal)
            continue;
        bool known = std::any_of(found.begin(), found.end(), [&](const Subspace& u) { return u.contains(x); });
        if (known)
            continue;
        auto basis = w.basis();
        basis.push_back(p);
        found.emplace_back(e, std::move(basis));
    }
    if (found.size() != 2)
        throw std::logic_error("expected exactly two generators through W, found " + std::to_string(found.size()));
    return {std::move(found[0]), std::move(found[1])};
}

CliqueInfo coset_clique(const Graph& g, const Subspace& u, const GF2Point& shift)
{
    const int e = half_dimension_of(g);
    if (u.e() != e || shift.e != e)
        throw std::invalid_argument("dimension mismatch between graph, subspace and shift");
    if (!u.is_generator())
        throw std::invalid_argument("subspace is not a generator");
    VertexSet members;
    for (auto x : u.elements())
        members.push_back(static_cast<Vertex>(x ^ shift.coords));
    return describe_clique(g, std::move(members));
}

std::vector<CliqueInfo> spread(const Graph& g, const Subspace& u)
{
    const int e = half_dimension_of(g);
    std::vector<bool> seen(g.order(), false);
    std::vector<CliqueInfo> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (seen[x])
            continue;
        auto c = coset_clique(g, u, GF2Point(x, e));
        for (auto y : c.members)
            seen[y] = true;
        out.push_back(std::move(c));
    }
    return out;
}

VertexSet pattern_set(std::string_view top, std::string_view bottom)
{
    auto p = parse_pattern(top, bottom);
    VertexSet out;
    // Enumerate submasks of the free bits in increasing order.
    std::uint64_t sub = 0;
    do {
        out.push_back(static_cast<Vertex>(p.fixed_ones | sub));
        sub = (sub - p.free) & p.free;
    } while (sub != 0);
    std::sort(out.begin(), out.end());
    return out;
}

Subspace pattern_subspace(std::string_view top, std::string_view bottom)
{
    auto p = parse_pattern(top, bottom);
    if (p.fixed_ones)
        throw std::invalid_argument("a subspace pattern cannot fix an entry to 1");
    std::vector<GF2Point> basis;
    for (int i = 0; i < 2 * p.e; ++i)
        if (p.free >> i & 1u)
            basis.emplace_back(1ull << i, p.e);
    return Subspace(p.e, std::move(basis));
}

GF2Point pattern_point(std::string_view top, std::string_view bottom)
{
    auto p = parse_pattern(top, bottom);
    if (p.free)
        throw std::invalid_argument("a point pattern cannot contain free entries");
    return GF2Point(p.fixed_ones, p.e);
}

} // namespace neumaier
