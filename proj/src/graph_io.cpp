#include "neumaier/graph_io.hpp"

#include <istream>
#include <sstream>

namespace neumaier {

namespace {

constexpr std::string_view header = ">>graph6<<";

void append_size(std::string& out, std::size_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

std::size_t sextet(std::string_view s, std::size_t pos, std::size_t base)
{
    if (pos >= s.size())
        throw Graph6Error("truncated graph6 data", base + pos);
    auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error("invalid graph6 byte " + std::to_string(c), base + pos);
    return c - 63;
}

} // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte offset " + std::to_string(offset)), message_(what), offset_(offset)
{
}

std::string to_graph6(const Graph& g)
{
    std::string out;
    const auto n = g.order();
    append_size(out, n);
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view line)
{
    std::size_t base = 0;
    if (line.starts_with(header)) {
        line.remove_prefix(header.size());
        base = header.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty())
        throw Graph6Error("empty graph6 line", base);

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] != 126) {
        n = sextet(line, 0, base);
        pos = 1;
    } else if (line.size() > 1 && line[1] == 126) {
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | sextet(line, i, base);
        pos = 8;
    } else {
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | sextet(line, i, base);
        pos = 4;
    }
    if (n == 0)
        throw Graph6Error("graph6 order must be positive", base);

    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t expected = pos + (pairs + 5) / 6;
    if (line.size() != expected)
        throw Graph6Error("graph6 length mismatch: expected " + std::to_string(expected) + " bytes, got " +
                              std::to_string(line.size()),
                          base + std::min(line.size(), expected));

    GraphBuilder b(n);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            auto c = sextet(line, pos + bit / 6, base);
            if ((c >> (5 - bit % 6)) & 1U)
                b.add_edge(i, j);
        }
    if (pairs % 6 != 0) {
        auto last_pos = pos + pairs / 6;
        auto c = sextet(line, last_pos, base);
        auto pad = 6 - pairs % 6;
        if (c & ((1U << pad) - 1))
            throw Graph6Error("nonzero graph6 padding bits", base + last_pos);
    }
    return std::move(b).build();
}

std::vector<Graph> read_graph6(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    std::size_t consumed = 0;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos) {
            try {
                out.push_back(from_graph6(line));
            } catch (const Graph6Error& e) {
                throw Graph6Error("line " + std::to_string(out.size() + 1) + ": " + e.message(), consumed + e.offset());
            }
        }
        consumed += line.size() + 1;
    }
    return out;
}

std::string to_dot(const Graph& g, std::string_view name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (Vertex u = 0; u < g.order(); ++u)
        os << "  " << u << ";\n";
    for (auto [u, w] : g.edges())
        os << "  " << u << " -- " << w << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace neumaier
