#ifndef DEZA_TESTS_ORACLES_HPP
#define DEZA_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by tests. They work on
// plain adjacency matrices and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "deza/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix_of(const deza::Graph& g)
{
    const int n = g.order();
    Matrix m(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            m[u][v] = g.adjacent(u, v) ? 1 : 0;
    return m;
}

inline deza::Graph graph_of(const Matrix& m)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < static_cast<int>(m.size()); ++u)
        for (int v = u + 1; v < static_cast<int>(m.size()); ++v)
            if (m[u][v])
                edges.emplace_back(u, v);
    return deza::Graph::from_edges(static_cast<int>(m.size()), edges);
}

inline int common(const Matrix& m, int u, int v)
{
    int c = 0;
    for (std::size_t w = 0; w < m.size(); ++w)
        c += m[u][w] && m[v][w];
    return c;
}

inline std::optional<int> degree_if_regular(const Matrix& m)
{
    std::optional<int> k;
    for (const auto& row : m) {
        const int d = static_cast<int>(std::count(row.begin(), row.end(), 1));
        if (k && *k != d)
            return std::nullopt;
        k = d;
    }
    return k;
}

/// Largest BFS distance, or -1 when disconnected.
inline int diameter(const Matrix& m)
{
    const int n = static_cast<int>(m.size());
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (m[u][v] && dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int d : dist) {
            if (d < 0)
                return -1;
            best = std::max(best, d);
        }
    }
    return best;
}

struct Deza
{
    int n, k, b, a;
    bool operator==(const Deza&) const = default;
};

inline std::optional<Deza> deza(const Matrix& m)
{
    const int n = static_cast<int>(m.size());
    const auto k = degree_if_regular(m);
    if (n == 0 || !k)
        return std::nullopt;
    std::set<int> counts;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            counts.insert(common(m, u, v));
    if (counts.size() > 2)
        return std::nullopt;
    if (counts.empty())
        return Deza{n, *k, 0, 0};
    return Deza{n, *k, *counts.rbegin(), *counts.begin()};
}

inline bool strongly_regular(const Matrix& m)
{
    if (!degree_if_regular(m))
        return false;
    std::set<int> adjacent, nonadjacent;
    for (std::size_t u = 0; u < m.size(); ++u)
        for (std::size_t v = u + 1; v < m.size(); ++v)
            (m[u][v] ? adjacent : nonadjacent).insert(common(m, int(u), int(v)));
    return adjacent.size() <= 1 && nonadjacent.size() <= 1;
}

inline bool strictly_deza(const Matrix& m)
{
    return deza(m) && diameter(m) == 2 && !strongly_regular(m);
}

/// Number of vertices sharing exactly `count` common neighbours with v.
inline int partners(const Matrix& m, int v, int count)
{
    int c = 0;
    for (int u = 0; u < static_cast<int>(m.size()); ++u)
        c += u != v && common(m, u, v) == count;
    return c;
}

/// Backtracking isomorphism test with degree pruning.
inline bool isomorphic(const Matrix& x, const Matrix& y)
{
    const int n = static_cast<int>(x.size());
    if (n != static_cast<int>(y.size()))
        return false;
    auto degrees = [n](const Matrix& m) {
        std::vector<int> d(n);
        for (int v = 0; v < n; ++v)
            d[v] = static_cast<int>(std::count(m[v].begin(), m[v].end(), 1));
        return d;
    };
    const auto dx = degrees(x), dy = degrees(y);
    auto sx = dx, sy = dy;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy)
        return false;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int v) {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || dx[v] != dy[w])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = x[v][u] == y[w][map[u]];
            if (!ok)
                continue;
            map[v] = w;
            used[w] = 1;
            if (place(v + 1))
                return true;
            used[w] = 0;
        }
        return false;
    };
    return place(0);
}

/// Keeps one representative per isomorphism class.
inline void add_if_new(std::vector<Matrix>& reps, const Matrix& m)
{
    for (const auto& r : reps)
        if (isomorphic(r, m))
            return;
    reps.push_back(m);
}

/// Every labeled graph on n vertices (n <= 7), passed to `visit`.
inline void for_each_labeled_graph(int n, const std::function<void(const Matrix&)>& visit)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    Matrix m(n, std::vector<char>(n, 0));
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const char bit = (mask >> i) & 1;
            m[pairs[i].first][pairs[i].second] = m[pairs[i].second][pairs[i].first] = bit;
        }
        visit(m);
    }
}

/// Connected k-regular graphs on n vertices up to isomorphism, by brute
/// force over labeled graphs. Feasible for n <= 7.
inline std::vector<Matrix> connected_regular_classes(int n, int k)
{
    std::vector<Matrix> reps;
    for_each_labeled_graph(n, [&](const Matrix& m) {
        const auto d = degree_if_regular(m);
        if (d && *d == k && (n == 1 || diameter(m) > 0))
            add_if_new(reps, m);
    });
    return reps;
}

/// The 2-clique extension of the complete multipartite graph with s parts
/// of size t, with vertex (part p, member q, copy i) numbered (p*t+q)*2+i.
inline Matrix family(int s, int t)
{
    const int n = 2 * s * t;
    Matrix m(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y)
                continue;
            const int px = x / (2 * t), py = y / (2 * t);
            const bool same_base = x / 2 == y / 2;
            m[x][y] = (px != py || same_base) ? 1 : 0;
        }
    return m;
}

inline Matrix permuted(const Matrix& m, const std::vector<int>& image)
{
    const std::size_t n = m.size();
    Matrix p(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            p[image[u]][image[v]] = m[u][v];
    return p;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng)
{
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i)
        image[i] = i;
    std::shuffle(image.begin(), image.end(), rng);
    return image;
}

} // namespace oracle

#endif // DEZA_TESTS_ORACLES_HPP
