#include "deza/graph6.hpp"

#include <istream>

#include "deza/errors.hpp"

namespace deza {

namespace {

constexpr int bias = 63;
constexpr char long_size_marker = 126;

} // namespace

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + bias));
    } else {
        out.push_back(long_size_marker);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + bias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + bias));
        out.push_back(static_cast<char>((n & 0x3f) + bias));
    }

    int word = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + bias));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((word << (6 - filled)) + bias));
    return out;
}

Graph from_graph6(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty graph6 record", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("character outside 63..126", i);
    }

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != long_size_marker) {
        n = text[0] - bias;
        pos = 1;
    } else {
        if (text.size() < 4)
            throw ParseError("truncated size prefix", text.size());
        if (text[1] == long_size_marker)
            throw ParseError("sizes above 258047 are not supported", 1);
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | (text[i] - bias);
        if (n <= 62)
            throw ParseError("non-canonical long size prefix", 1);
        pos = 4;
    }
    if (n < 1 || n > Graph::max_order)
        throw ParseError("graph order " + std::to_string(n) + " outside 1.." + std::to_string(Graph::max_order), 0);

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos != byte_count)
        throw ParseError("expected " + std::to_string(byte_count) + " adjacency bytes, found "
                             + std::to_string(text.size() - pos),
                         std::min(text.size(), pos + byte_count));

    GraphBuilder builder(n);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int value = text[pos + bit / 6] - bias;
            if ((value >> (5 - bit % 6)) & 1)
                builder.add_edge(i, j);
        }
    }
    if (bit % 6 != 0) {
        const std::size_t last = pos + byte_count - 1;
        const int pad_mask = (1 << (6 - bit % 6)) - 1;
        if (((text[last] - bias) & pad_mask) != 0)
            throw ParseError("nonzero padding bits", last);
    }
    return builder.build();
}

std::vector<Graph> read_graph6_lines(std::istream& in)
{
    std::vector<Graph> graphs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        // Optional file header.
        if (number == 1 && line.starts_with(">>graph6<<"))
            line.erase(0, 10);
        try {
            graphs.push_back(from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(number) + ": invalid graph6: " + e.message(), e.offset());
        }
    }
    return graphs;
}

} // namespace deza
