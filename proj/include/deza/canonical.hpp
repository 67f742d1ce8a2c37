#ifndef DEZA_CANONICAL_HPP
#define DEZA_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

/// Label-invariant representative of an isomorphism class: the graph6 text
/// of the canonically relabeled graph. Equal iff the graphs are isomorphic.
struct CanonicalForm
{
    std::string graph6;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling
{
    std::vector<Vertex> image; ///< vertex v of the input becomes image[v]
    Graph graph;               ///< input relabeled by image
};

/// Equitable partition refinement with individualization; the canonical
/// labeling is the search-tree leaf whose adjacency rows are
/// lexicographically largest. Automorphisms found at equal leaves prune
/// sibling subtrees.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

} // namespace deza

#endif // DEZA_CANONICAL_HPP
