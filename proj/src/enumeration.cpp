#include "deza/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "deza/errors.hpp"
#include "deza/graph6.hpp"
#include "deza/verifier.hpp"
#include "orderly.hpp"

namespace deza {

int max_order_from_environment(int fallback)
{
    const char* raw = std::getenv("DEZA_MAX_N");
    if (!raw || !*raw)
        return fallback;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1)
        return fallback;
    return static_cast<int>(std::min<long>(value, hard_max_order));
}

namespace {

void check_ceiling(int n, const EnumerationOptions& options)
{
    const int ceiling = std::min(options.max_order, hard_max_order);
    if (n > ceiling)
        throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration ceiling " + std::to_string(ceiling)
                            + "; raise it with --max-n or DEZA_MAX_N (at most " + std::to_string(hard_max_order)
                            + ")");
}

struct WorkItem
{
    std::size_t spec;
    detail::SearchNode node;
};

/// Runs every search to completion and returns the complete graphs of each
/// spec. The forest is split into independent subtrees; with more than one
/// worker it is expanded breadth-first until there is enough work to share.
/// Per-item results are concatenated in item order, so the output does not
/// depend on scheduling.
std::vector<std::vector<Graph>> run_searches(const std::vector<detail::SearchSpec>& specs,
                                             const EnumerationOptions& options)
{
    std::atomic<std::uint64_t> visited{0};
    std::vector<detail::OrderlyGenerator> generators;
    generators.reserve(specs.size());
    for (const auto& spec : specs) {
        generators.emplace_back(spec);
        generators.back().set_budget(&visited, options.node_limit);
    }

    std::vector<WorkItem> items;
    for (std::size_t i = 0; i < specs.size(); ++i)
        items.push_back({i, generators[i].root()});

    const int workers = std::max(1, options.workers);
    const std::size_t wanted = workers > 1 ? static_cast<std::size_t>(workers) * 16 : 0;
    while (items.size() < wanted) {
        std::vector<WorkItem> next;
        bool grew = false;
        for (const auto& item : items) {
            const auto& gen = generators[item.spec];
            if (gen.is_complete(item.node)) {
                next.push_back(item);
                continue;
            }
            for (auto& child : gen.children(item.node))
                next.push_back({item.spec, child});
            grew = true;
        }
        items = std::move(next);
        if (!grew)
            break;
    }

    std::vector<std::vector<Graph>> per_item(items.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= items.size())
                return;
            try {
                generators[items[i].spec].search(items[i].node,
                                                 [&](const Graph& g) { per_item[i].push_back(g); });
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                cursor = items.size();
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    if (failure) {
        std::size_t found = 0;
        for (const auto& r : per_item)
            found += r.size();
        try {
            std::rethrow_exception(failure);
        } catch (const ResourceError& e) {
            throw ResourceError(std::string(e.what()) + " after " + std::to_string(found)
                                + " graphs; the result would be incomplete");
        }
    }

    std::vector<std::vector<Graph>> out(specs.size());
    for (std::size_t i = 0; i < items.size(); ++i)
        for (auto& g : per_item[i])
            out[items[i].spec].push_back(std::move(g));
    return out;
}

/// Canonically relabels, drops isomorphic repeats, and sorts by canonical
/// form.
std::vector<Graph> canonical_sorted(const std::vector<Graph>& graphs)
{
    std::map<CanonicalForm, Graph> unique;
    for (const auto& g : graphs) {
        auto labeling = canonical_labeling(g);
        CanonicalForm form{to_graph6(labeling.graph)};
        unique.try_emplace(std::move(form), std::move(labeling.graph));
    }
    std::vector<Graph> out;
    out.reserve(unique.size());
    for (auto& [form, g] : unique)
        out.push_back(std::move(g));
    return out;
}

} // namespace

RegularEnumeration enumerate_regular(int n, int k, const EnumerationOptions& options)
{
    RegularEnumeration result;
    if (n < 1 || k < 0 || k >= n) {
        result.note = "no connected " + std::to_string(k) + "-regular graph on " + std::to_string(n)
                      + " vertices: need 0 <= k < n";
        return result;
    }
    if ((n * k) % 2 != 0) {
        result.note = "n*k is odd, so no " + std::to_string(k) + "-regular graph on " + std::to_string(n)
                      + " vertices exists";
        return result;
    }
    if (n > 1 && k == 0) {
        result.note = "a 0-regular graph on more than one vertex is disconnected";
        return result;
    }
    check_ceiling(n, options);
    detail::SearchSpec spec{n, k, false, 0, 0};
    auto found = run_searches({spec}, options);
    result.graphs = canonical_sorted(found[0]);
    return result;
}

CensusRecord make_census_record(const Graph& g)
{
    const auto params = deza_parameters(g);
    if (!params || params->b == params->a)
        throw PreconditionError("census records need a Deza graph with b > a");
    CensusRecord record;
    record.graph6 = to_graph6(g);
    record.params = *params;
    const auto profile = vertex_profile(g, *params, 0);
    record.alpha = profile.alpha;
    record.beta = profile.beta;
    if (!standing_hypothesis_failure(g))
        record.types = type_census(classify_vertices(g, *params));

    record.theorem1.applicable = is_strictly_deza(g) && profile.beta > 1;
    const auto verdict = verify_theorem1(g);
    record.theorem1.holds = verdict.holds();
    if (!verdict.holds())
        record.theorem1.reason = verdict.counterexample().condition + ": " + verdict.counterexample().detail;
    return record;
}

std::vector<Graph> enumerate_strictly_deza_graphs(int n, const EnumerationOptions& options)
{
    check_ceiling(n, options);
    std::vector<detail::SearchSpec> specs;
    // Diameter 2 rules out k = n - 1 (complete) and k <= 1 (disconnected).
    for (int k = 2; k <= n - 2; ++k) {
        if ((n * k) % 2 != 0)
            continue;
        for (int b = 1; b <= k; ++b)
            for (int a = 0; a < b; ++a)
                specs.push_back({n, k, true, b, a});
    }
    if (specs.empty())
        return {};
    const auto found = run_searches(specs, options);

    std::vector<Graph> hits;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const DezaParameters wanted{n, specs[i].k, specs[i].b, specs[i].a};
        for (const auto& g : found[i])
            if (is_strictly_deza(g) && deza_parameters(g) == wanted)
                hits.push_back(g);
    }
    auto sorted = canonical_sorted(hits);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Graph& x, const Graph& y) { return x.degree(0) < y.degree(0); });
    return sorted;
}

std::vector<CensusRecord> enumerate_strictly_deza(int n, const EnumerationOptions& options)
{
    std::vector<CensusRecord> records;
    for (const auto& g : enumerate_strictly_deza_graphs(n, options))
        records.push_back(make_census_record(g));
    return records;
}

} // namespace deza
