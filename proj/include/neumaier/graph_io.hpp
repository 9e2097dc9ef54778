#pragma once

#include "neumaier/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace neumaier {

/// Malformed graph6 input. offset() is the 0-based byte offset of the
/// offending character within the line.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

/// McKay graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
Graph from_graph6(std::string_view line);

/// Reads every non-blank line of a graph6 stream.
std::vector<Graph> read_graph6(std::istream& in);

std::string to_dot(const Graph& g, std::string_view name = "G");

} // namespace neumaier
