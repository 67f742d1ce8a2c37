#ifndef DEZA_ANALYSIS_HPP
#define DEZA_ANALYSIS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deza/graph.hpp"
#include "deza/rational.hpp"

namespace deza {

/// (n, k, b, a): a k-regular graph on n vertices in which every pair of
/// distinct vertices has b or a common neighbours, b >= a.
struct DezaParameters
{
    int n = 0;
    int k = 0;
    int b = 0;
    int a = 0;

    /// "(n,k,b,a)"
    std::string to_string() const;
    friend auto operator<=>(const DezaParameters&, const DezaParameters&) = default;
};

struct SrgParameters
{
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    friend auto operator<=>(const SrgParameters&, const SrgParameters&) = default;
};

/// Present when g is nonempty, regular, and its pairwise common-neighbour
/// counts take at most two values. A single value c yields b = a = c.
std::optional<DezaParameters> deza_parameters(const Graph& g);

/// Present when g is nonempty, regular, and common-neighbour counts depend
/// only on adjacency. Complete graphs qualify with mu reported as 0.
std::optional<SrgParameters> is_strongly_regular(const Graph& g);

/// Deza, diameter 2, not strongly regular.
bool is_strictly_deza(const Graph& g);

/// Short reason why g is not strictly Deza ("not regular", "diameter 3",
/// "strongly regular", ...); absent when it is.
std::optional<std::string> strictly_deza_failure(const Graph& g);

struct VertexProfile
{
    Vertex v = 0;
    VertexSet a_set; ///< vertices sharing a common neighbours with v
    VertexSet b_set; ///< vertices sharing b common neighbours with v
    int alpha = 0;
    int beta = 0;

    /// B[v] = B(v) ∪ {v}
    VertexSet closed_b() const { return b_set | VertexSet::single(v); }
};

/// Splits V \ {v} by common-neighbour count. Requires b > a; a graph with
/// b = a is strongly regular and has no A/B split.
VertexProfile vertex_profile(const Graph& g, const DezaParameters& params, Vertex v);

/// (k(k-1) - a(n-1)) / (b - a), exact. Throws std::domain_error when b = a.
Rational beta_by_formula(const DezaParameters& params);

enum class VertexKind { A1, A2, B, C };

std::string_view to_string(VertexKind kind);

/// Placement of B(v) relative to N(v). `star` is the distinguished vertex:
/// the twin in N(v) ∩ B(v) for C, the common vertex y of N(v) \ N(x_i) for
/// A1, the common vertex z of N(x_i) \ N(v) for A2, none for B.
struct VertexType
{
    VertexKind kind = VertexKind::C;
    std::optional<Vertex> star;

    friend bool operator==(const VertexType&, const VertexType&) = default;
};

struct TypeCensus
{
    int a1 = 0;
    int a2 = 0;
    int b = 0;
    int c = 0;

    int total() const { return a1 + a2 + b + c; }
    friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

/// Why g fails "strictly Deza with k = b + 1 and beta > 1", or absent when
/// it satisfies all three.
std::optional<std::string> standing_hypothesis_failure(const Graph& g);

/// Throws PreconditionError unless params are g's parameters and g satisfies
/// the standing hypothesis.
void require_standing_hypothesis(const Graph& g, const DezaParameters& params);

VertexType classify_vertex(const Graph& g, const DezaParameters& params, Vertex v);

/// classify_vertex for every vertex, checking the hypothesis once.
std::vector<VertexType> classify_vertices(const Graph& g, const DezaParameters& params);

TypeCensus type_census(const std::vector<VertexType>& types);

/// Partition of the vertices into the closed sets B[v].
struct RhoPartition
{
    std::vector<VertexSet> classes; ///< ordered by smallest member
    std::vector<int> class_of;      ///< vertex -> index into classes
};

RhoPartition rho_partition(const Graph& g, const DezaParameters& params);

/// Graph on the classes; X ~ Y iff members of X are adjacent to members of
/// Y. Throws ContradictionError when the cross-class adjacency is mixed.
Graph quotient_graph(const Graph& g, const RhoPartition& rho);

} // namespace deza

#endif // DEZA_ANALYSIS_HPP
