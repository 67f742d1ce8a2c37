#include "orderly.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "deza/errors.hpp"

namespace deza::detail {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

/// Position j of a row occupies bit 63 - j, so integer order on keys is
/// lexicographic order on rows with position 0 most significant.
constexpr std::uint64_t key_bit(int position) { return std::uint64_t{1} << (63 - position); }

struct MaximalityTest
{
    const std::uint64_t* rows;
    int order;
    std::array<std::uint64_t, orderly_max_order> target{};
    std::array<std::uint64_t, orderly_max_order> twins{};

    MaximalityTest(const std::uint64_t* r, int n) : rows(r), order(n)
    {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (rows[i] & bit(j))
                    target[i] |= key_bit(j);
        // u and t are twins when swapping them is an automorphism.
        for (int u = 0; u < n; ++u)
            for (int t = 0; t < n; ++t)
                if (t != u && (rows[u] & ~bit(t)) == (rows[t] & ~bit(u)))
                    twins[u] |= bit(t);
    }

    /// Depth-first over relabelings π, position by position; `keys[w]` is
    /// the row w would get at the current depth. Returns true as soon as some
    /// partial relabeling beats the identity.
    bool beaten(int depth, std::uint64_t used, const std::array<std::uint64_t, orderly_max_order>& keys) const
    {
        if (depth == order)
            return false;
        const std::uint64_t goal = target[depth];
        for (int w = 0; w < order; ++w)
            if (!(used & bit(w)) && keys[w] > goal)
                return true;
        std::uint64_t explored = 0;
        for (int u = 0; u < order; ++u) {
            if ((used & bit(u)) || keys[u] != goal)
                continue;
            if (twins[u] & explored)
                continue;
            explored |= bit(u);
            std::array<std::uint64_t, orderly_max_order> next = keys;
            const std::uint64_t mark = key_bit(depth);
            for (Vertex w : VertexSet(rows[u] & ~used))
                next[w] |= mark;
            if (beaten(depth + 1, used | bit(u), next))
                return true;
        }
        return false;
    }
};

} // namespace

bool is_maximal_labeling(const std::uint64_t* rows, int order)
{
    MaximalityTest test(rows, order);
    return !test.beaten(0, 0, {});
}

OrderlyGenerator::OrderlyGenerator(SearchSpec spec) : spec_(spec)
{
    if (spec_.n < 1 || spec_.n > orderly_max_order)
        throw ResourceError("orderly generation supports 1.." + std::to_string(orderly_max_order) + " vertices, got "
                            + std::to_string(spec_.n));
    if (spec_.k < 0 || spec_.k >= spec_.n)
        throw ArgumentError("degree must satisfy 0 <= k < n");
}

Graph OrderlyGenerator::to_graph(const SearchNode& node) const
{
    return Graph::from_rows(std::vector<std::uint64_t>(node.rows.begin(), node.rows.begin() + node.placed));
}

bool OrderlyGenerator::admissible(const SearchNode& child) const
{
    const int placed = child.placed;
    const int future = spec_.n - placed;
    std::array<int, orderly_max_order> rem{};
    for (int u = 0; u < placed; ++u)
        rem[u] = spec_.k - std::popcount(child.rows[u]);

    for (int u = 0; u < placed; ++u) {
        for (int w = u + 1; w < placed; ++w) {
            const int c = std::popcount(child.rows[u] & child.rows[w]);
            if (c > spec_.b)
                return false;
            const bool linked = child.rows[u] & bit(w);
            const int need = linked ? spec_.a : std::max(spec_.a, 1);
            if (rem[u] == 0 || rem[w] == 0) {
                if (c != spec_.a && c != spec_.b)
                    return false;
                if (!linked && c == 0)
                    return false;
            } else if (c + std::min({rem[u], rem[w], future}) < need) {
                return false;
            }
        }
    }
    return true;
}

void OrderlyGenerator::extend(const SearchNode& node, const std::function<void(const SearchNode&)>& accept) const
{
    const int m = node.placed;
    const int n = spec_.n;
    const int k = spec_.k;
    const int after = n - m - 1; // vertices still to come once m is placed

    std::uint64_t open = 0;
    std::uint64_t forced = 0;
    for (int j = 0; j < m; ++j) {
        const int deficit = k - std::popcount(node.rows[j]);
        if (deficit > 0)
            open |= bit(j);
        if (deficit > after + 1)
            return;
        if (deficit > after)
            forced |= bit(j);
    }
    const int min_size = std::max(1, k - after);
    // Row m may not exceed row m-1 on their common positions 0..m-2.
    const std::uint64_t previous = m >= 2 ? node.rows[m - 1] & (bit(m - 1) - 1) : 0;

    std::uint64_t chosen = 0;
    std::function<void(int, int, bool)> choose = [&](int j, int size, bool tight) {
        if (size + (m - j) < min_size)
            return;
        if (j == m) {
            SearchNode child = node;
            child.placed = m + 1;
            child.rows[m] = chosen;
            for (Vertex v : VertexSet(chosen))
                child.rows[v] |= bit(m);
            if (spec_.deza && !admissible(child))
                return;
            if (!is_maximal_labeling(child.rows.data(), m + 1))
                return;
            accept(child);
            return;
        }
        const bool bounded = tight && j <= m - 2;
        const bool prev_bit = previous & bit(j);
        // bit j = 1
        if ((open & bit(j)) && size < k && (!bounded || prev_bit)) {
            bool ok = true;
            if (spec_.deza)
                for (Vertex i : VertexSet(chosen))
                    if (std::popcount(node.rows[i] & node.rows[j]) >= spec_.b) {
                        ok = false;
                        break;
                    }
            if (ok) {
                chosen |= bit(j);
                choose(j + 1, size + 1, bounded);
                chosen &= ~bit(j);
            }
        }
        // bit j = 0
        if (!(forced & bit(j)))
            choose(j + 1, size, bounded && !prev_bit);
    };
    choose(0, 0, m >= 2);
}

std::vector<SearchNode> OrderlyGenerator::children(const SearchNode& node) const
{
    std::vector<SearchNode> out;
    extend(node, [&](const SearchNode& child) { out.push_back(child); });
    return out;
}

std::uint64_t OrderlyGenerator::search(const SearchNode& node, const std::function<void(const Graph&)>& emit) const
{
    std::uint64_t visited = 1;
    if (counter_) {
        const std::uint64_t seen = counter_->fetch_add(1, std::memory_order_relaxed) + 1;
        if (limit_ != 0 && seen > limit_)
            throw ResourceError("search node limit " + std::to_string(limit_) + " exceeded");
    }
    if (is_complete(node)) {
        emit(to_graph(node));
        return visited;
    }
    extend(node, [&](const SearchNode& child) { visited += search(child, emit); });
    return visited;
}

} // namespace deza::detail
