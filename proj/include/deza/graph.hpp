#ifndef DEZA_GRAPH_HPP
#define DEZA_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace deza {

using Vertex = int;

/// A set of vertices of a graph with at most 64 vertices, stored as one word.
class VertexSet
{
public:
    class iterator
    {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
    /// {0, ..., n-1}
    static constexpr VertexSet first(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Smallest member; the set must be nonempty.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const;

    friend constexpr VertexSet operator&(VertexSet x, VertexSet y) { return VertexSet(x.bits_ & y.bits_); }
    friend constexpr VertexSet operator|(VertexSet x, VertexSet y) { return VertexSet(x.bits_ | y.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet x, VertexSet y) { return VertexSet(x.bits_ & ~y.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet x, VertexSet y) { return x.bits_ <=> y.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1, 1 <= n <= 64.
/// Row v holds the neighbor bitmask of v; rows are symmetric with a zero
/// diagonal. Build one with GraphBuilder or Graph::from_edges.
class Graph
{
public:
    static constexpr int max_order = 64;

    /// Single isolated vertex.
    Graph() : rows_(1, 0) {}

    static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    VertexSet vertices() const { return VertexSet::first(order()); }
    VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    int degree(Vertex v) const { return std::popcount(rows_[v]); }
    int edge_count() const;
    std::span<const std::uint64_t> rows() const { return rows_; }

    /// Graph in which old vertex v is called `image[v]`; `image` must be a
    /// permutation of 0..n-1.
    Graph relabeled(std::span<const Vertex> image) const;

    bool operator==(const Graph&) const = default;

private:
    explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

    std::vector<std::uint64_t> rows_;
};

class GraphBuilder
{
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int order() const { return static_cast<int>(rows_.size()); }
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    Graph build() const { return Graph::from_rows(rows_); }

private:
    void check_pair(Vertex u, Vertex v) const;

    std::vector<std::uint64_t> rows_;
};

/// |N(u) ∩ N(v)|. Throws ArgumentError when u == v or a vertex is out of range.
int common_neighbors(const Graph& g, Vertex u, Vertex v);

VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// Vertices at distance exactly 2 from v.
VertexSet second_neighborhood(const Graph& g, Vertex v);

/// k when every vertex has degree k and the graph has at least one edge.
std::optional<int> regular_degree(const Graph& g);

/// Eccentricity maximum over BFS from every vertex; absent if disconnected.
std::optional<int> diameter(const Graph& g);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Induced subgraph on `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();

} // namespace deza

#endif // DEZA_GRAPH_HPP
