#ifndef DEZA_CONSTRUCTIONS_HPP
#define DEZA_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "deza/analysis.hpp"
#include "deza/graph.hpp"

namespace deza {

/// Part sizes of a complete multipartite graph.
class MultipartiteShape
{
public:
    /// Throws ArgumentError on an empty list or a part of size < 1.
    explicit MultipartiteShape(std::vector<int> part_sizes);
    /// `parts` parts of `size` vertices each.
    static MultipartiteShape uniform(int parts, int size);

    const std::vector<int>& part_sizes() const { return sizes_; }
    int order() const;

private:
    std::vector<int> sizes_;
};

/// Vertices numbered part by part; edges exactly between distinct parts.
Graph complete_multipartite(const MultipartiteShape& shape);

/// Composition of `base` by `fiber`: vertex (v, i) is numbered
/// v * |fiber| + i, and (v,i) ~ (u,j) iff v ~ u in base, or v = u and i ~ j
/// in fiber.
Graph extension(const Graph& base, const Graph& fiber);

/// Extension by K_m. Throws ArgumentError when m < 1.
Graph clique_extension(const Graph& base, int m);
/// Extension by the edgeless graph on m vertices.
Graph coclique_extension(const Graph& base, int m);

/// 2-clique extension of the complete multipartite graph with s parts of
/// size t. Strictly Deza with parameters (2st, 2(s-1)t+1, 2(s-1)t, 2(s-2)t+2)
/// and beta = 2t - 1. Vertex (part p, member q, copy i) is numbered
/// (p*t + q)*2 + i. Requires s >= 2 and t >= 2.
Graph theorem1_family(int s, int t);

/// Expected parameters of theorem1_family(s, t).
DezaParameters theorem1_parameters(int s, int t);

struct FamilyIndex
{
    int s = 0; ///< number of parts
    int t = 0; ///< part size

    friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
};

/// First violated feasibility identity for a quadruple with b = k - 1.
struct Infeasible
{
    std::string identity; ///< short machine-stable tag, e.g. "a = 2k - n"
    std::string reason;   ///< human-readable explanation
};

/// Checks, in order: basic parameter ranges, b = k - 1, a != k - 2, b > a,
/// integral beta, beta > 1, a = 2k - n, n - k + 1 even, part size >= 2,
/// (n - k + 1) | n. Returns the realizing (s, t) or the first failure.
std::variant<FamilyIndex, Infeasible> theorem1_feasibility(const DezaParameters& params);

/// The unique strictly Deza graph with these parameters when feasible.
/// Throws InfeasibleParameters otherwise.
Graph construct_from_parameters(const DezaParameters& params);

class InfeasibleParameters : public std::invalid_argument
{
public:
    explicit InfeasibleParameters(Infeasible detail)
        : std::invalid_argument(detail.reason), detail_(std::move(detail))
    {
    }
    const Infeasible& detail() const { return detail_; }

private:
    Infeasible detail_;
};

} // namespace deza

#endif // DEZA_CONSTRUCTIONS_HPP
