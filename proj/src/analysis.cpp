#include "deza/analysis.hpp"

#include <stdexcept>

#include "deza/errors.hpp"

namespace deza {

std::string DezaParameters::to_string() const
{
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(b) + "," + std::to_string(a)
           + ")";
}

std::optional<DezaParameters> deza_parameters(const Graph& g)
{
    const auto k = regular_degree(g);
    if (!k)
        return std::nullopt;
    const int n = g.order();
    int values[2] = {-1, -1};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int c = (g.neighbors(u) & g.neighbors(v)).size();
            if (c == values[0] || c == values[1])
                continue;
            if (values[0] < 0)
                values[0] = c;
            else if (values[1] < 0)
                values[1] = c;
            else
                return std::nullopt;
        }
    }
    DezaParameters p{n, *k, values[0], values[1] < 0 ? values[0] : values[1]};
    if (p.b < p.a)
        std::swap(p.b, p.a);
    return p;
}

std::optional<SrgParameters> is_strongly_regular(const Graph& g)
{
    const auto k = regular_degree(g);
    if (!k)
        return std::nullopt;
    const int n = g.order();
    int lambda = -1;
    int mu = -1;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int c = (g.neighbors(u) & g.neighbors(v)).size();
            int& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot < 0)
                slot = c;
            else if (slot != c)
                return std::nullopt;
        }
    }
    return SrgParameters{n, *k, lambda, mu < 0 ? 0 : mu};
}

std::optional<std::string> strictly_deza_failure(const Graph& g)
{
    if (!regular_degree(g))
        return g.edge_count() == 0 ? "empty graph" : "not regular";
    if (!deza_parameters(g))
        return "not a Deza graph (more than two common-neighbour counts)";
    const auto d = diameter(g);
    if (!d)
        return "disconnected";
    if (*d != 2)
        return "diameter " + std::to_string(*d);
    if (is_strongly_regular(g))
        return "strongly regular";
    return std::nullopt;
}

bool is_strictly_deza(const Graph& g) { return !strictly_deza_failure(g).has_value(); }

VertexProfile vertex_profile(const Graph& g, const DezaParameters& params, Vertex v)
{
    if (params.b == params.a)
        throw PreconditionError("vertex_profile needs b > a; b = a means the graph is strongly regular");
    if (v < 0 || v >= g.order())
        throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    VertexProfile profile;
    profile.v = v;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u == v)
            continue;
        const int c = (g.neighbors(u) & g.neighbors(v)).size();
        if (c == params.a)
            profile.a_set.insert(u);
        else if (c == params.b)
            profile.b_set.insert(u);
        else
            throw PreconditionError("pair (" + std::to_string(v) + "," + std::to_string(u) + ") has " + std::to_string(c)
                                    + " common neighbours, not a Deza graph with parameters " + params.to_string());
    }
    profile.alpha = profile.a_set.size();
    profile.beta = profile.b_set.size();
    return profile;
}

Rational beta_by_formula(const DezaParameters& p)
{
    if (p.b == p.a)
        throw std::domain_error("beta formula undefined for b = a");
    const std::int64_t numerator = std::int64_t{p.k} * (p.k - 1) - std::int64_t{p.a} * (p.n - 1);
    return Rational(numerator, p.b - p.a);
}

std::string_view to_string(VertexKind kind)
{
    switch (kind) {
    case VertexKind::A1:
        return "A1";
    case VertexKind::A2:
        return "A2";
    case VertexKind::B:
        return "B";
    case VertexKind::C:
        return "C";
    }
    return "?";
}

std::optional<std::string> standing_hypothesis_failure(const Graph& g)
{
    if (auto why = strictly_deza_failure(g))
        return "not strictly Deza: " + *why;
    const auto params = *deza_parameters(g);
    if (params.k != params.b + 1)
        return "k != b + 1 (k = " + std::to_string(params.k) + ", b = " + std::to_string(params.b) + ")";
    const int beta = vertex_profile(g, params, 0).beta;
    if (beta <= 1)
        return "beta = " + std::to_string(beta) + ", need beta > 1";
    return std::nullopt;
}

void require_standing_hypothesis(const Graph& g, const DezaParameters& params)
{
    if (auto why = standing_hypothesis_failure(g))
        throw PreconditionError(*why);
    if (params != *deza_parameters(g))
        throw PreconditionError("parameters " + params.to_string() + " do not match the graph's "
                                + deza_parameters(g)->to_string());
}

namespace {

VertexType classify_unchecked(const Graph& g, const DezaParameters& params, Vertex v)
{
    const VertexSet nv = g.neighbors(v);
    const VertexSet bv = vertex_profile(g, params, v).b_set;
    const VertexSet inside = bv & nv;

    if (inside.empty()) {
        // Each x_i in B(v) misses exactly one vertex of N(v) and has exactly
        // one neighbour outside N(v).
        std::optional<VertexSet> lost;   // common value of N(v) \ N(x_i)
        std::optional<VertexSet> gained; // common value of N(x_i) \ N(v)
        bool same_lost = true;
        bool same_gained = true;
        for (Vertex x : bv) {
            const VertexSet l = nv - g.neighbors(x);
            const VertexSet r = g.neighbors(x) - nv;
            if (l.size() != 1 || r.size() != 1)
                throw ContradictionError("vertex " + std::to_string(v) + ": neighbourhood difference with "
                                         + std::to_string(x) + " is not a single vertex");
            if (!lost)
                lost = l;
            else if (*lost != l)
                same_lost = false;
            if (!gained)
                gained = r;
            else if (*gained != r)
                same_gained = false;
        }
        if (same_lost)
            return {VertexKind::A1, lost->front()};
        if (same_gained)
            return {VertexKind::A2, gained->front()};
        throw ContradictionError("vertex " + std::to_string(v)
                                 + " has B(v) disjoint from N(v) but matches neither the A1 nor the A2 pattern");
    }
    if (bv.is_subset_of(nv))
        return {VertexKind::B, std::nullopt};
    if (inside.size() == 1)
        return {VertexKind::C, inside.front()};
    throw ContradictionError("vertex " + std::to_string(v) + ": |B(v) ∩ N(v)| = " + std::to_string(inside.size())
                             + " but B(v) is not contained in N(v)");
}

} // namespace

VertexType classify_vertex(const Graph& g, const DezaParameters& params, Vertex v)
{
    require_standing_hypothesis(g, params);
    if (v < 0 || v >= g.order())
        throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    return classify_unchecked(g, params, v);
}

std::vector<VertexType> classify_vertices(const Graph& g, const DezaParameters& params)
{
    require_standing_hypothesis(g, params);
    std::vector<VertexType> types;
    types.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        types.push_back(classify_unchecked(g, params, v));
    return types;
}

TypeCensus type_census(const std::vector<VertexType>& types)
{
    TypeCensus census;
    for (const auto& t : types) {
        switch (t.kind) {
        case VertexKind::A1:
            ++census.a1;
            break;
        case VertexKind::A2:
            ++census.a2;
            break;
        case VertexKind::B:
            ++census.b;
            break;
        case VertexKind::C:
            ++census.c;
            break;
        }
    }
    return census;
}

RhoPartition rho_partition(const Graph& g, const DezaParameters& params)
{
    require_standing_hypothesis(g, params);
    const int n = g.order();
    std::vector<VertexSet> closed(n);
    for (Vertex v = 0; v < n; ++v)
        closed[v] = vertex_profile(g, params, v).closed_b();

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (closed[u].intersects(closed[v]) && closed[u] != closed[v])
                throw ContradictionError("B[" + std::to_string(u) + "] and B[" + std::to_string(v)
                                         + "] overlap without being equal");

    RhoPartition rho;
    rho.class_of.assign(n, -1);
    const int size = closed[0].size();
    for (Vertex v = 0; v < n; ++v) {
        if (rho.class_of[v] >= 0)
            continue;
        if (closed[v].size() != size)
            throw ContradictionError("classes of different sizes: " + std::to_string(size) + " and "
                                     + std::to_string(closed[v].size()));
        const int index = static_cast<int>(rho.classes.size());
        rho.classes.push_back(closed[v]);
        for (Vertex u : closed[v])
            rho.class_of[u] = index;
    }
    return rho;
}

Graph quotient_graph(const Graph& g, const RhoPartition& rho)
{
    const int count = static_cast<int>(rho.classes.size());
    if (count < 1 || static_cast<int>(rho.class_of.size()) != g.order())
        throw ArgumentError("partition does not match the graph");
    GraphBuilder builder(count);
    for (int x = 0; x < count; ++x) {
        for (int y = x + 1; y < count; ++y) {
            const Vertex rx = rho.classes[x].front();
            const Vertex ry = rho.classes[y].front();
            const bool linked = g.adjacent(rx, ry);
            for (Vertex u : rho.classes[x])
                for (Vertex w : rho.classes[y])
                    if (g.adjacent(u, w) != linked)
                        throw ContradictionError("classes " + std::to_string(x) + " and " + std::to_string(y)
                                                 + " have mixed adjacency at (" + std::to_string(u) + ","
                                                 + std::to_string(w) + ")");
            if (linked)
                builder.add_edge(x, y);
        }
    }
    return builder.build();
}

} // namespace deza
