#ifndef DEZA_SRC_ORDERLY_HPP
#define DEZA_SRC_ORDERLY_HPP

// Orderly generation of connected k-regular graphs (Read/Faradzev style).
//
// Vertices are added one at a time; vertex m chooses its neighbours among
// vertices 0..m-1. A labeled graph is kept only if it is maximal, over all
// relabelings, under the order that compares the rows
//   row(i) = x(i,0) x(i,1) ... x(i,i-1)
// lexicographically for i = 0, 1, ... . Maximality is hereditary (every
// prefix of a maximal labeling is maximal), so testing it after every
// addition yields exactly one labeled graph per isomorphism class.
//
// In Deza mode every pair of distinct vertices must finish with b or a
// common neighbours. Once a vertex is saturated (degree k) its counts with
// every placed vertex are final, which gives strong pruning.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "deza/graph.hpp"

namespace deza::detail {

inline constexpr int orderly_max_order = 16;

struct SearchSpec
{
    int n = 0;
    int k = 0;
    bool deza = false; ///< constrain common-neighbour counts to {b, a}
    int b = 0;
    int a = 0;
};

/// Partial labeled graph: vertices 0..placed-1 exist.
struct SearchNode
{
    int placed = 1;
    std::array<std::uint64_t, orderly_max_order> rows{};
};

class OrderlyGenerator
{
public:
    explicit OrderlyGenerator(SearchSpec spec);

    const SearchSpec& spec() const { return spec_; }
    SearchNode root() const { return SearchNode{}; }
    bool is_complete(const SearchNode& node) const { return node.placed == spec_.n; }

    /// All accepted one-vertex extensions of a non-complete node.
    std::vector<SearchNode> children(const SearchNode& node) const;

    /// Depth-first search below `node`, calling `emit` on each complete
    /// graph. Returns the number of nodes visited.
    std::uint64_t search(const SearchNode& node, const std::function<void(const Graph&)>& emit) const;

    Graph to_graph(const SearchNode& node) const;

    /// Shared node counter; search throws ResourceError once it passes
    /// `limit` (0 = unlimited).
    void set_budget(std::atomic<std::uint64_t>* counter, std::uint64_t limit)
    {
        counter_ = counter;
        limit_ = limit;
    }

private:
    void extend(const SearchNode& node, const std::function<void(const SearchNode&)>& accept) const;
    bool admissible(const SearchNode& child) const;

    SearchSpec spec_;
    std::atomic<std::uint64_t>* counter_ = nullptr;
    std::uint64_t limit_ = 0;
};

/// True when no relabeling of the graph on vertices 0..order-1 gives a
/// lexicographically larger row sequence.
bool is_maximal_labeling(const std::uint64_t* rows, int order);

} // namespace deza::detail

#endif // DEZA_SRC_ORDERLY_HPP
