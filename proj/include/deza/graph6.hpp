#ifndef DEZA_GRAPH6_HPP
#define DEZA_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

/// Standard graph6 encoding: size prefix N(n), then the upper triangle
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, each byte
/// offset by 63, final byte zero-padded.
std::string to_graph6(const Graph& g);

/// Parses one graph6 record (no trailing newline). Throws ParseError with the
/// offending byte offset on malformed input.
Graph from_graph6(std::string_view text);

/// One graph per line; blank lines are errors. Throws ParseError whose message
/// is prefixed with "line N: ".
std::vector<Graph> read_graph6_lines(std::istream& in);

} // namespace deza

#endif // DEZA_GRAPH6_HPP
