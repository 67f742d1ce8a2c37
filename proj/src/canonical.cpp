#include "deza/canonical.hpp"

#include <array>
#include <numeric>

#include "deza/graph6.hpp"

namespace deza {

namespace {

/// Ordered cells of a vertex partition.
using Partition = std::vector<VertexSet>;

/// Splits cells by neighbour counts into earlier cells until the partition is
/// equitable. Sub-cells are ordered by increasing count, so the result
/// depends only on the graph structure, not on vertex names.
void refine(const Graph& g, Partition& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            const VertexSet splitter = cells[w];
            Partition next;
            next.reserve(cells.size() + 4);
            for (VertexSet cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::array<VertexSet, Graph::max_order + 1> by_count{};
                int lo = Graph::max_order;
                int hi = 0;
                for (Vertex v : cell) {
                    const int c = (g.neighbors(v) & splitter).size();
                    by_count[c].insert(v);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) {
                    next.push_back(cell);
                    continue;
                }
                for (int c = lo; c <= hi; ++c)
                    if (!by_count[c].empty())
                        next.push_back(by_count[c]);
                changed = true;
            }
            if (changed)
                cells = std::move(next);
        }
    }
}

class DisjointSets
{
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int x, int y) { parent_[find(x)] = find(y); }

private:
    std::vector<int> parent_;
};

class CanonicalSearch
{
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run()
    {
        Partition root{g_.vertices()};
        std::vector<Vertex> path;
        search(std::move(root), path);
        std::vector<Vertex> image(n_);
        for (int i = 0; i < n_; ++i)
            image[best_lab_[i]] = i;
        return {image, Graph::from_rows(best_rows_)};
    }

private:
    void leaf(const Partition& cells)
    {
        std::vector<Vertex> lab;
        lab.reserve(n_);
        for (VertexSet cell : cells)
            lab.push_back(cell.front());
        std::vector<Vertex> image(n_);
        for (int i = 0; i < n_; ++i)
            image[lab[i]] = i;
        std::vector<std::uint64_t> rows(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex u : g_.neighbors(v))
                rows[image[v]] |= std::uint64_t{1} << image[u];

        if (best_lab_.empty() || rows > best_rows_) {
            best_lab_ = std::move(lab);
            best_rows_ = std::move(rows);
        } else if (rows == best_rows_) {
            std::vector<Vertex> sigma(n_);
            bool identity = true;
            for (Vertex v = 0; v < n_; ++v) {
                sigma[v] = best_lab_[image[v]];
                identity = identity && sigma[v] == v;
            }
            if (!identity)
                automorphisms_.push_back(std::move(sigma));
        }
    }

    /// True when v lies in the orbit of an explored sibling under the
    /// automorphisms found so far that fix `path` pointwise.
    bool equivalent_to_explored(Vertex v, VertexSet explored, const std::vector<Vertex>& path)
    {
        if (explored.empty() || automorphisms_.empty())
            return false;
        DisjointSets orbits(n_);
        for (const auto& sigma : automorphisms_) {
            bool fixes = true;
            for (Vertex p : path)
                fixes = fixes && sigma[p] == p;
            if (!fixes)
                continue;
            for (Vertex x = 0; x < n_; ++x)
                orbits.unite(x, sigma[x]);
        }
        for (Vertex u : explored)
            if (orbits.find(u) == orbits.find(v))
                return true;
        return false;
    }

    void search(Partition cells, std::vector<Vertex>& path)
    {
        refine(g_, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
                target = i;
        if (target == cells.size()) {
            leaf(cells);
            return;
        }

        const VertexSet cell = cells[target];
        VertexSet explored;
        for (Vertex v : cell) {
            if (equivalent_to_explored(v, explored, path))
                continue;
            explored.insert(v);
            Partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(VertexSet::single(v));
            child.push_back(cell - VertexSet::single(v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            path.push_back(v);
            search(std::move(child), path);
            path.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> best_lab_;
    std::vector<std::uint64_t> best_rows_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_labeling(g).graph)}; }

} // namespace deza
