#include "deza/constructions.hpp"

#include <numeric>

#include "deza/errors.hpp"

namespace deza {

MultipartiteShape::MultipartiteShape(std::vector<int> part_sizes) : sizes_(std::move(part_sizes))
{
    if (sizes_.empty())
        throw ArgumentError("a multipartite shape needs at least one part");
    for (int s : sizes_)
        if (s < 1)
            throw ArgumentError("part sizes must be positive");
}

MultipartiteShape MultipartiteShape::uniform(int parts, int size)
{
    if (parts < 1)
        throw ArgumentError("a multipartite shape needs at least one part");
    return MultipartiteShape(std::vector<int>(parts, size));
}

int MultipartiteShape::order() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

Graph complete_multipartite(const MultipartiteShape& shape)
{
    const int n = shape.order();
    if (n > Graph::max_order)
        throw ArgumentError("complete multipartite graph would have " + std::to_string(n) + " vertices");
    std::vector<int> part(n);
    int next = 0;
    for (std::size_t p = 0; p < shape.part_sizes().size(); ++p)
        for (int i = 0; i < shape.part_sizes()[p]; ++i)
            part[next++] = static_cast<int>(p);
    GraphBuilder builder(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[u] != part[v])
                builder.add_edge(u, v);
    return builder.build();
}

Graph extension(const Graph& base, const Graph& fiber)
{
    const int m = fiber.order();
    const int n = base.order() * m;
    if (n > Graph::max_order)
        throw ArgumentError("extension would have " + std::to_string(n) + " vertices");
    GraphBuilder builder(n);
    for (Vertex v = 0; v < base.order(); ++v) {
        for (int i = 0; i < m; ++i) {
            for (Vertex u : base.neighbors(v))
                for (int j = 0; j < m; ++j)
                    if (v < u)
                        builder.add_edge(v * m + i, u * m + j);
            for (Vertex j : fiber.neighbors(i))
                if (i < j)
                    builder.add_edge(v * m + i, v * m + j);
        }
    }
    return builder.build();
}

Graph clique_extension(const Graph& base, int m)
{
    if (m < 1)
        throw ArgumentError("clique extension multiplicity must be >= 1");
    return extension(base, complete_graph(m));
}

Graph coclique_extension(const Graph& base, int m)
{
    if (m < 1)
        throw ArgumentError("coclique extension multiplicity must be >= 1");
    return extension(base, empty_graph(m));
}

Graph theorem1_family(int s, int t)
{
    if (s < 2)
        throw ArgumentError("theorem1_family needs s >= 2 parts; one part gives a disconnected graph");
    if (t < 2)
        throw ArgumentError("theorem1_family needs part size t >= 2; t = 1 gives beta = 1");
    return clique_extension(complete_multipartite(MultipartiteShape::uniform(s, t)), 2);
}

DezaParameters theorem1_parameters(int s, int t)
{
    return {2 * s * t, 2 * (s - 1) * t + 1, 2 * (s - 1) * t, 2 * (s - 2) * t + 2};
}

std::variant<FamilyIndex, Infeasible> theorem1_feasibility(const DezaParameters& p)
{
    const auto fail = [](std::string identity, std::string reason) -> std::variant<FamilyIndex, Infeasible> {
        return Infeasible{std::move(identity), std::move(reason)};
    };
    const std::string quad = p.to_string();
    if (!(p.n > p.k && p.k >= 1 && p.b >= p.a && p.a >= 0 && p.b <= p.k))
        return fail("n > k >= 1, k >= b >= a >= 0", quad + " violates n > k >= 1, k >= b >= a >= 0");
    if (p.n > Graph::max_order)
        return fail("n <= 64", quad + ": n exceeds " + std::to_string(Graph::max_order));
    if (p.b != p.k - 1)
        return fail("b = k - 1", quad + ": b = k - 1 required (b = " + std::to_string(p.b) + ", k = "
                                     + std::to_string(p.k) + ")");
    if (p.a == p.k - 2)
        return fail("a != k - 2", quad + ": a = k-2 impossible, no strictly Deza graph has parameters (n,k,k-1,k-2)");
    if (p.b == p.a)
        return fail("b > a", quad + ": b = a means strongly regular");
    const Rational beta = beta_by_formula(p);
    if (!beta.is_integer())
        return fail("beta integral", quad + ": beta = " + beta.to_string() + " is not an integer");
    if (beta <= Rational(1))
        return fail("beta > 1", quad + ": beta = " + beta.to_string() + ", need beta > 1");
    if (p.a != 2 * p.k - p.n)
        return fail("a = 2k - n", quad + ": a != 2k - n (" + std::to_string(p.a) + " != "
                                      + std::to_string(2 * p.k - p.n) + ")");
    const int part_span = p.n - p.k + 1;
    if (part_span % 2 != 0)
        return fail("n - k + 1 even", quad + ": n - k + 1 = " + std::to_string(part_span) + " is odd");
    if (part_span / 2 < 2)
        return fail("(n - k + 1)/2 >= 2", quad + ": part size (n - k + 1)/2 = " + std::to_string(part_span / 2)
                                              + " < 2");
    if (p.n % part_span != 0)
        return fail("(n - k + 1) | n", quad + ": n - k + 1 = " + std::to_string(part_span) + " does not divide n = "
                                           + std::to_string(p.n));
    return FamilyIndex{p.n / part_span, part_span / 2};
}

Graph construct_from_parameters(const DezaParameters& params)
{
    auto verdict = theorem1_feasibility(params);
    if (auto* failure = std::get_if<Infeasible>(&verdict))
        throw InfeasibleParameters(*failure);
    const auto index = std::get<FamilyIndex>(verdict);
    return theorem1_family(index.s, index.t);
}

} // namespace deza
