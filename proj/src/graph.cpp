#include "deza/graph.hpp"

#include <string>

#include "deza/errors.hpp"

namespace deza {

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this)
        out.push_back(v);
    return out;
}

namespace {

void check_order(int n)
{
    if (n < 1 || n > Graph::max_order)
        throw ArgumentError("graph order must be in 1.." + std::to_string(Graph::max_order) + ", got "
                            + std::to_string(n));
}

void check_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
}

} // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    GraphBuilder builder(n);
    for (auto [u, v] : edges)
        builder.add_edge(u, v);
    return builder.build();
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const std::uint64_t mask = VertexSet::first(n).bits();
    for (int v = 0; v < n; ++v) {
        if ((rows[v] & ~mask) != 0 || ((rows[v] >> v) & 1U))
            throw ArgumentError("row " + std::to_string(v) + " has a loop or an out-of-range neighbor");
        for (Vertex u : VertexSet(rows[v]))
            if (!((rows[u] >> v) & 1U))
                throw ArgumentError("adjacency is not symmetric at (" + std::to_string(v) + ","
                                    + std::to_string(u) + ")");
    }
    return Graph(std::move(rows));
}

int Graph::edge_count() const
{
    int total = 0;
    for (auto row : rows_)
        total += std::popcount(row);
    return total / 2;
}

Graph Graph::relabeled(std::span<const Vertex> image) const
{
    const int n = order();
    if (static_cast<int>(image.size()) != n)
        throw ArgumentError("relabeling has wrong length");
    std::uint64_t seen = 0;
    for (Vertex v : image) {
        if (v < 0 || v >= n || ((seen >> v) & 1U))
            throw ArgumentError("relabeling is not a permutation");
        seen |= std::uint64_t{1} << v;
    }
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < n; ++v)
        for (Vertex u : neighbors(v))
            rows[image[v]] |= std::uint64_t{1} << image[u];
    return Graph(std::move(rows));
}

GraphBuilder::GraphBuilder(int n)
{
    check_order(n);
    rows_.assign(n, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows().begin(), g.rows().end()) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const
{
    const int n = order();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ArgumentError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v)
        throw ArgumentError("loops are not allowed (vertex " + std::to_string(u) + ")");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check_pair(u, v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
    return *this;
}

int common_neighbors(const Graph& g, Vertex u, Vertex v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        throw ArgumentError("common_neighbors needs two distinct vertices");
    return (g.neighbors(u) & g.neighbors(v)).size();
}

VertexSet neighborhood(const Graph& g, Vertex v)
{
    check_vertex(g, v);
    return g.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v)
{
    check_vertex(g, v);
    return g.neighbors(v) | VertexSet::single(v);
}

VertexSet second_neighborhood(const Graph& g, Vertex v)
{
    check_vertex(g, v);
    VertexSet reach;
    for (Vertex u : g.neighbors(v))
        reach = reach | g.neighbors(u);
    return reach - closed_neighborhood(g, v);
}

std::optional<int> regular_degree(const Graph& g)
{
    const int k = g.degree(0);
    if (k == 0)
        return std::nullopt;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != k)
            return std::nullopt;
    return k;
}

namespace {

/// Largest BFS distance from `source`, or -1 when some vertex is unreachable.
int eccentricity(const Graph& g, Vertex source)
{
    const VertexSet all = g.vertices();
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    int depth = 0;
    while (seen != all) {
        VertexSet next;
        for (Vertex u : frontier)
            next = next | g.neighbors(u);
        next = next - seen;
        if (next.empty())
            return -1;
        seen = seen | next;
        frontier = next;
        ++depth;
    }
    return depth;
}

} // namespace

std::optional<int> diameter(const Graph& g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const int e = eccentricity(g, v);
        if (e < 0)
            return std::nullopt;
        best = std::max(best, e);
    }
    return best;
}

bool is_connected(const Graph& g) { return eccentricity(g, 0) >= 0; }

Graph complement(const Graph& g)
{
    const int n = g.order();
    const std::uint64_t all = VertexSet::first(n).bits();
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v)
        rows[v] = all & ~g.rows()[v] & ~(std::uint64_t{1} << v);
    return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet keep)
{
    const auto members = keep.to_vector();
    GraphBuilder builder(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return builder.build();
}

Graph complete_graph(int n) { return complement(empty_graph(n)); }

Graph cycle_graph(int n)
{
    GraphBuilder builder(n);
    for (Vertex v = 0; v < n; ++v)
        builder.add_edge(v, (v + 1) % n);
    return builder.build();
}

Graph path_graph(int n)
{
    GraphBuilder builder(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        builder.add_edge(v, v + 1);
    return builder.build();
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph petersen_graph()
{
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    GraphBuilder builder(10);
    for (Vertex i = 0; i < 5; ++i) {
        builder.add_edge(i, (i + 1) % 5);
        builder.add_edge(5 + i, 5 + (i + 2) % 5);
        builder.add_edge(i, i + 5);
    }
    return builder.build();
}

} // namespace deza
