#include "deza/verifier.hpp"

#include <algorithm>
#include <functional>

#include "deza/errors.hpp"

namespace deza {

namespace {

std::string vertex_list(const std::vector<Vertex>& vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size() && i < 8; ++i)
        out += (i ? "," : "") + std::to_string(vs[i]);
    if (vs.size() > 8)
        out += ",...";
    return out;
}

Counterexample fail(std::string condition, std::string detail, std::vector<Vertex> vertices = {})
{
    return {std::move(condition), std::move(detail), std::move(vertices)};
}

} // namespace

TheoremVerdict verify_theorem1(const Graph& g)
{
    if (auto why = strictly_deza_failure(g))
        return fail("strictly Deza", *why);
    const DezaParameters p = *deza_parameters(g);
    if (p.k != p.b + 1)
        return fail("k = b + 1", "k = " + std::to_string(p.k) + ", b = " + std::to_string(p.b));
    const int beta = vertex_profile(g, p, 0).beta;
    if (beta <= 1)
        return fail("beta > 1", "beta = " + std::to_string(beta));

    std::vector<VertexType> types;
    try {
        types = classify_vertices(g, p);
    } catch (const ContradictionError& e) {
        return fail("vertex classification", e.what());
    }
    const int n = g.order();
    std::vector<Vertex> twin(n, -1);
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < n; ++v)
        if (types[v].kind != VertexKind::C)
            bad.push_back(v);
    if (!bad.empty())
        return fail("all vertices of type C", "not of type C: " + vertex_list(bad), bad);
    for (Vertex v = 0; v < n; ++v) {
        twin[v] = *types[v].star;
        if (closed_neighborhood(g, v) != closed_neighborhood(g, twin[v]))
            bad.push_back(v);
    }
    if (!bad.empty())
        return fail("star is a closed-neighbourhood twin", "vertices " + vertex_list(bad), bad);
    for (Vertex v = 0; v < n; ++v)
        if (twin[twin[v]] != v)
            bad.push_back(v);
    if (!bad.empty())
        return fail("twins form a perfect matching", "vertices " + vertex_list(bad), bad);

    RhoPartition rho;
    Graph quotient;
    try {
        rho = rho_partition(g, p);
        quotient = quotient_graph(g, rho);
    } catch (const ContradictionError& e) {
        return fail("rho partition and quotient", e.what());
    }
    const int class_size = beta + 1;
    if (class_size != p.n - p.k + 1)
        return fail("class size n - k + 1", "beta + 1 = " + std::to_string(class_size) + ", n - k + 1 = "
                                                + std::to_string(p.n - p.k + 1));
    for (std::size_t c = 0; c < rho.classes.size(); ++c) {
        const VertexSet cls = rho.classes[c];
        if (cls.size() != class_size)
            return fail("class size n - k + 1", "class " + std::to_string(c) + " has "
                                                    + std::to_string(cls.size()) + " vertices", cls.to_vector());
        for (Vertex v : cls)
            if (!cls.contains(twin[v]))
                return fail("classes are unions of twin pairs", "twin of " + std::to_string(v) + " leaves its class",
                            {v, twin[v]});
    }
    const int s = static_cast<int>(rho.classes.size());
    if (quotient.edge_count() != s * (s - 1) / 2)
        return fail("quotient is complete", "quotient on " + std::to_string(s) + " classes has "
                                                + std::to_string(quotient.edge_count()) + " edges");

    Theorem1Witness w;
    w.s = s;
    w.t = class_size / 2;
    w.parts = rho.classes;
    w.quotient = quotient;
    for (Vertex v = 0; v < n; ++v)
        if (v < twin[v])
            w.twin_pairs.emplace_back(v, twin[v]);
    w.relabeling.assign(n, -1);
    for (int part = 0; part < s; ++part) {
        int q = 0;
        for (Vertex v : rho.classes[part]) {
            if (v > twin[v])
                continue;
            w.relabeling[v] = (part * w.t + q) * 2;
            w.relabeling[twin[v]] = (part * w.t + q) * 2 + 1;
            ++q;
        }
    }
    if (g.relabeled(w.relabeling) != theorem1_family(w.s, w.t))
        return fail("relabeling reproduces the family", "twin/part labeling does not match theorem1_family("
                                                            + std::to_string(w.s) + "," + std::to_string(w.t) + ")");
    return w;
}

std::string_view to_string(VerdictStatus status)
{
    switch (status) {
    case VerdictStatus::holds:
        return "holds";
    case VerdictStatus::fails:
        return "fails";
    case VerdictStatus::inapplicable:
        return "inapplicable";
    }
    return "?";
}

Theorem2Verdict verify_theorem2(const DezaParameters& p)
{
    Theorem2Verdict verdict;
    if (p.b != p.k - 1) {
        verdict.reason = "b != k - 1";
        return verdict;
    }
    if (p.b == p.a) {
        verdict.reason = "b = a, beta undefined";
        return verdict;
    }
    const Rational beta = beta_by_formula(p);
    if (beta <= Rational(1)) {
        verdict.reason = "beta = " + beta.to_string() + " <= 1";
        return verdict;
    }
    verdict.status = VerdictStatus::fails;
    if (p.a != 2 * p.k - p.n) {
        verdict.reason = "a != 2k - n (" + std::to_string(p.a) + " != " + std::to_string(2 * p.k - p.n) + ")";
        return verdict;
    }
    const auto feasibility = theorem1_feasibility(p);
    if (const auto* bad = std::get_if<Infeasible>(&feasibility)) {
        verdict.reason = bad->reason;
        return verdict;
    }
    verdict.status = VerdictStatus::holds;
    verdict.family = std::get<FamilyIndex>(feasibility);
    verdict.reason = "a = 2k - n; realized by theorem1_family(" + std::to_string(verdict.family->s) + ","
                     + std::to_string(verdict.family->t) + ")";
    return verdict;
}

bool LemmaReport::all_passed() const
{
    return applicable && std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

const LemmaCheck* LemmaReport::find(std::string_view id) const
{
    for (const auto& c : checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

namespace {

/// Position of B(v) relative to N(v), without the A1/A2 refinement.
enum class Placement { disjoint, contained, single, other };

struct LemmaContext
{
    LemmaContext(const Graph& graph, DezaParameters params) : g(graph), p(params) {}

    const Graph& g;
    DezaParameters p;
    int n = 0;
    int beta = 0;
    int alpha = 0;
    std::vector<VertexSet> b_open;   // B(v)
    std::vector<VertexSet> b_closed; // B[v]
    std::vector<Placement> placement;
    std::vector<std::optional<VertexKind>> kind; // absent when unclassifiable
    std::vector<std::string> kind_error;

    bool is_type_a(Vertex v) const { return placement[v] == Placement::disjoint; }
    bool is_type_bc(Vertex v) const
    {
        return placement[v] == Placement::contained || placement[v] == Placement::single;
    }
};

struct Checker
{
    LemmaReport& report;

    void add(std::string id, std::string claim, const std::function<std::string()>& run)
    {
        LemmaCheck check{std::move(id), std::move(claim), true, false, {}};
        check.details = run();
        check.passed = check.details.empty();
        report.checks.push_back(std::move(check));
    }
};

std::string first_failures(const std::vector<Vertex>& bad, const std::string& what)
{
    return bad.empty() ? std::string() : what + ": " + vertex_list(bad);
}

} // namespace

LemmaReport lemma_suite(const Graph& g)
{
    LemmaReport report;
    static const std::vector<std::pair<const char*, const char*>> catalogue = {
        {"vertex_trichotomy", "B(v) ∩ N(v) is empty, all of B(v), or a single vertex"},
        {"positive_parameters", "alpha > 0 and b > a > 0"},
        {"type_a_coclique", "for type-A x, B[x] induces a coclique of size beta + 1"},
        {"type_a_closure", "for type-A x and x_i in B(x), B[x_i] = B[x] and x_i is type A"},
        {"type_a_refinement", "every type-A vertex is A1 or A2"},
        {"bc_closure", "for type-B/C v and u in B(v), B[u] = B[v] and u has v's type"},
        {"b_classes_partition", "B[u] and B[v] are equal or disjoint"},
        {"neighbour_class_containment", "for type-B/C v and u in N(v) \\ B(v), B[u] ⊆ N(v) \\ B(v)"},
        {"class_divisibility", "beta + 1 divides k - 1 (A1, C) or k - beta (A2, B)"},
        {"type_homogeneity", "all vertex types fall in {A1, C} or all in {A2, B}"},
        {"not_all_type_b", "not every vertex is type B"},
        {"no_type_a1", "no vertex is type A1"},
        {"no_type_a2", "no vertex is type A2"},
        {"quotient_complete", "rho classes are (beta+1)/2 twin pairs and the quotient is complete on n/(beta+1) vertices"},
        {"type_census", "type census is {C: n}"},
    };

    if (auto why = standing_hypothesis_failure(g)) {
        report.precondition_failure = *why;
        for (const auto& [id, claim] : catalogue)
            report.checks.push_back({id, claim, false, false, *why});
        return report;
    }
    report.applicable = true;

    LemmaContext ctx{g, *deza_parameters(g)};
    ctx.n = g.order();
    for (Vertex v = 0; v < ctx.n; ++v) {
        const auto profile = vertex_profile(g, ctx.p, v);
        ctx.b_open.push_back(profile.b_set);
        ctx.b_closed.push_back(profile.closed_b());
        ctx.alpha = profile.alpha;
        ctx.beta = profile.beta;
        const VertexSet inside = profile.b_set & g.neighbors(v);
        if (inside.empty())
            ctx.placement.push_back(Placement::disjoint);
        else if (profile.b_set.is_subset_of(g.neighbors(v)))
            ctx.placement.push_back(Placement::contained);
        else if (inside.size() == 1)
            ctx.placement.push_back(Placement::single);
        else
            ctx.placement.push_back(Placement::other);
        try {
            ctx.kind.push_back(classify_vertex(g, ctx.p, v).kind);
            ctx.kind_error.emplace_back();
        } catch (const ContradictionError& e) {
            ctx.kind.push_back(std::nullopt);
            ctx.kind_error.emplace_back(e.what());
        }
    }
    const int n = ctx.n;
    const int beta = ctx.beta;
    const auto& p = ctx.p;
    Checker check{report};
    auto claim = [&](std::size_t i) { return std::string(catalogue[i].second); };

    check.add("vertex_trichotomy", claim(0), [&] {
        std::vector<Vertex> bad;
        for (Vertex v = 0; v < n; ++v)
            if (ctx.placement[v] == Placement::other)
                bad.push_back(v);
        return first_failures(bad, "vertices outside the trichotomy");
    });
    check.add("positive_parameters", claim(1), [&]() -> std::string {
        if (ctx.alpha <= 0)
            return "alpha = " + std::to_string(ctx.alpha);
        if (!(p.b > p.a && p.a > 0))
            return "b = " + std::to_string(p.b) + ", a = " + std::to_string(p.a);
        return {};
    });
    check.add("type_a_coclique", claim(2), [&] {
        std::vector<Vertex> bad;
        for (Vertex x = 0; x < n; ++x) {
            if (!ctx.is_type_a(x))
                continue;
            const VertexSet cls = ctx.b_closed[x];
            bool independent = cls.size() == beta + 1;
            for (Vertex u : cls)
                independent = independent && !g.neighbors(u).intersects(cls);
            if (!independent)
                bad.push_back(x);
        }
        return first_failures(bad, "B[x] not a coclique of size beta + 1");
    });
    check.add("type_a_closure", claim(3), [&] {
        std::vector<Vertex> bad;
        for (Vertex x = 0; x < n; ++x) {
            if (!ctx.is_type_a(x))
                continue;
            for (Vertex xi : ctx.b_open[x])
                if (ctx.b_closed[xi] != ctx.b_closed[x] || !ctx.is_type_a(xi)) {
                    bad.push_back(x);
                    break;
                }
        }
        return first_failures(bad, "type-A vertices violating closure");
    });
    check.add("type_a_refinement", claim(4), [&] {
        std::vector<Vertex> bad;
        for (Vertex x = 0; x < n; ++x)
            if (ctx.is_type_a(x) && !ctx.kind[x])
                bad.push_back(x);
        return first_failures(bad, "type-A vertices matching neither A1 nor A2");
    });
    check.add("bc_closure", claim(5), [&] {
        std::vector<Vertex> bad;
        for (Vertex v = 0; v < n; ++v) {
            if (!ctx.is_type_bc(v))
                continue;
            for (Vertex u : ctx.b_open[v])
                if (ctx.b_closed[u] != ctx.b_closed[v] || ctx.placement[u] != ctx.placement[v]) {
                    bad.push_back(v);
                    break;
                }
        }
        return first_failures(bad, "type-B/C vertices violating closure");
    });
    check.add("b_classes_partition", claim(6), [&] {
        std::vector<Vertex> bad;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (ctx.b_closed[u].intersects(ctx.b_closed[v]) && ctx.b_closed[u] != ctx.b_closed[v]) {
                    bad.push_back(u);
                    bad.push_back(v);
                }
        return first_failures(bad, "overlapping unequal B[.] pairs");
    });
    check.add("neighbour_class_containment", claim(7), [&] {
        std::vector<Vertex> bad;
        for (Vertex v = 0; v < n; ++v) {
            if (!ctx.is_type_bc(v))
                continue;
            const VertexSet outside = g.neighbors(v) - ctx.b_open[v];
            for (Vertex u : outside)
                if (!ctx.b_closed[u].is_subset_of(outside)) {
                    bad.push_back(v);
                    break;
                }
        }
        return first_failures(bad, "containment fails at");
    });
    check.add("class_divisibility", claim(8), [&] {
        std::vector<Vertex> bad;
        for (Vertex v = 0; v < n; ++v) {
            if (!ctx.kind[v])
                continue;
            const VertexKind kd = *ctx.kind[v];
            const int target = (kd == VertexKind::A1 || kd == VertexKind::C) ? p.k - 1 : p.k - beta;
            if (target % (beta + 1) != 0)
                bad.push_back(v);
        }
        return first_failures(bad, "divisibility fails at");
    });
    check.add("type_homogeneity", claim(9), [&]() -> std::string {
        bool first_group = false;
        bool second_group = false;
        for (const auto& kd : ctx.kind) {
            if (!kd)
                continue;
            if (*kd == VertexKind::A1 || *kd == VertexKind::C)
                first_group = true;
            else
                second_group = true;
        }
        return first_group && second_group ? "both {A1, C} and {A2, B} types occur" : "";
    });
    std::vector<VertexType> classified;
    for (const auto& kd : ctx.kind)
        if (kd)
            classified.push_back({*kd, std::nullopt});
    const TypeCensus counts = type_census(classified);
    check.add("not_all_type_b", claim(10), [&]() -> std::string {
        return counts.b == n ? "all vertices are type B" : "";
    });
    check.add("no_type_a1", claim(11), [&]() -> std::string {
        return counts.a1 ? std::to_string(counts.a1) + " vertices of type A1" : "";
    });
    check.add("no_type_a2", claim(12), [&]() -> std::string {
        return counts.a2 ? std::to_string(counts.a2) + " vertices of type A2" : "";
    });
    check.add("quotient_complete", claim(13), [&]() -> std::string {
        if (counts.c != n)
            return "not all vertices are type C";
        try {
            const RhoPartition rho = rho_partition(g, p);
            const Graph q = quotient_graph(g, rho);
            const int classes = static_cast<int>(rho.classes.size());
            if (classes * (beta + 1) != n)
                return "class count " + std::to_string(classes) + " != n/(beta+1)";
            if (q.edge_count() != classes * (classes - 1) / 2)
                return "quotient is not complete";
            if ((beta + 1) % 2 != 0 || (beta + 1) / 2 != (p.n - p.k + 1) / 2 || (p.n - p.k + 1) % 2 != 0)
                return "class size is not 2 * (n - k + 1)/2";
            for (const VertexSet cls : rho.classes) {
                // Within a class the induced edges must be (beta+1)/2 disjoint twin edges.
                int edges = 0;
                for (Vertex v : cls) {
                    const VertexSet inner = g.neighbors(v) & cls;
                    if (inner.size() != 1 || closed_neighborhood(g, v) != closed_neighborhood(g, inner.front()))
                        return "class member " + std::to_string(v) + " is not in exactly one twin edge";
                    ++edges;
                }
                if (edges / 2 != (beta + 1) / 2)
                    return "class does not split into (beta+1)/2 twin edges";
            }
        } catch (const ContradictionError& e) {
            return e.what();
        }
        return {};
    });
    check.add("type_census", claim(14), [&]() -> std::string {
        if (counts.c == n)
            return {};
        return "A1=" + std::to_string(counts.a1) + " A2=" + std::to_string(counts.a2) + " B="
               + std::to_string(counts.b) + " C=" + std::to_string(counts.c);
    });
    return report;
}

} // namespace deza
