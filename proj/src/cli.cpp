#include "deza/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "deza/census_json.hpp"
#include "deza/constructions.hpp"
#include "deza/enumeration.hpp"
#include "deza/errors.hpp"
#include "deza/graph6.hpp"
#include "deza/verifier.hpp"

namespace deza::cli {

namespace {

using nlohmann::ordered_json;

Format format_or(const RunConfig& config, Format fallback) { return config.format.value_or(fallback); }

std::vector<Graph> read_inputs(const RunConfig& config)
{
    if (config.inline_graph6) {
        std::istringstream in(*config.inline_graph6);
        auto graphs = read_graph6_lines(in);
        if (graphs.empty())
            throw ParseError("line 1: invalid graph6: empty input", 0);
        return graphs;
    }
    if (*config.input_path == "-")
        return read_graph6_lines(std::cin);
    std::ifstream in(*config.input_path);
    if (!in)
        throw ArgumentError("cannot open input file " + *config.input_path);
    return read_graph6_lines(in);
}

/// Runs `body` against the --output file when given, else against `out`.
template <typename Body>
void with_output(const RunConfig& config, std::ostream& out, Body body)
{
    if (!config.output) {
        body(out);
        return;
    }
    std::ofstream file(*config.output, std::ios::binary);
    if (!file)
        throw ArgumentError("cannot open output file " + *config.output);
    body(file);
}

ordered_json vertex_list(VertexSet set)
{
    ordered_json list = ordered_json::array();
    for (Vertex v : set)
        list.push_back(v);
    return list;
}

ordered_json nonzero_types(const TypeCensus& t)
{
    ordered_json j = ordered_json::object();
    if (t.a1)
        j["A1"] = t.a1;
    if (t.a2)
        j["A2"] = t.a2;
    if (t.b)
        j["B"] = t.b;
    if (t.c)
        j["C"] = t.c;
    return j;
}

bool is_complete_graph(const Graph& g) { return g.edge_count() * 2 == g.order() * (g.order() - 1); }

ordered_json analyze_one(const Graph& g)
{
    ordered_json j;
    j["graph6"] = to_graph6(g);
    j["order"] = g.order();
    const auto degree = regular_degree(g);
    j["regular_degree"] = degree ? ordered_json(*degree) : ordered_json(nullptr);
    const auto params = deza_parameters(g);
    j["deza"] = params.has_value();
    j["parameters"] = params ? ordered_json(params->to_string()) : ordered_json(nullptr);
    if (params) {
        j["n"] = params->n;
        j["k"] = params->k;
        j["b"] = params->b;
        j["a"] = params->a;
    }
    const auto srg = is_strongly_regular(g);
    j["strongly_regular"] = srg.has_value();
    if (srg)
        j["srg_parameters"] = {{"n", srg->n}, {"k", srg->k}, {"lambda", srg->lambda}, {"mu", srg->mu}};
    const auto strict_failure = strictly_deza_failure(g);
    j["strictly_deza"] = !strict_failure;
    if (strict_failure)
        j["strictly_deza_failure"] = *strict_failure;

    if (!params || params->b == params->a)
        return j;
    const auto profile = vertex_profile(g, *params, 0);
    j["alpha"] = profile.alpha;
    j["beta"] = profile.beta;
    j["beta_formula"] = beta_by_formula(*params).to_string();

    const auto hypothesis = standing_hypothesis_failure(g);
    j["standing_hypothesis"] = !hypothesis;
    if (hypothesis) {
        j["hypothesis_failure"] = *hypothesis;
        return j;
    }
    try {
        j["types"] = nonzero_types(type_census(classify_vertices(g, *params)));
        const auto rho = rho_partition(g, *params);
        ordered_json classes = ordered_json::array();
        for (const auto& c : rho.classes)
            classes.push_back(vertex_list(c));
        j["rho_classes"] = classes;
        const auto quotient = quotient_graph(g, rho);
        j["quotient"] = {{"order", quotient.order()},
                         {"complete", is_complete_graph(quotient)},
                         {"graph6", to_graph6(quotient)}};
    } catch (const ContradictionError& e) {
        j["analysis_error"] = e.what();
    }
    return j;
}

void analyze_table(const ordered_json& j, std::ostream& os)
{
    os << "graph6           " << j["graph6"].get<std::string>() << '\n';
    os << "parameters       " << (j["deza"].get<bool>() ? j["parameters"].get<std::string>() : "not Deza") << '\n';
    os << "strongly regular " << (j["strongly_regular"].get<bool>() ? "yes" : "no") << '\n';
    os << "strictly Deza    "
       << (j["strictly_deza"].get<bool>() ? std::string("yes") : "no (" + j["strictly_deza_failure"].get<std::string>() + ")")
       << '\n';
    if (j.contains("beta"))
        os << "alpha, beta      " << j["alpha"].get<int>() << ", " << j["beta"].get<int>() << '\n';
    if (j.contains("types")) {
        os << "types           ";
        for (const auto& [kind, count] : j["types"].items())
            os << ' ' << kind << '=' << count.get<int>();
        os << '\n';
    }
    if (j.contains("rho_classes")) {
        os << "rho classes     ";
        for (const auto& c : j["rho_classes"]) {
            os << " {";
            for (std::size_t i = 0; i < c.size(); ++i)
                os << (i ? "," : "") << c[i].get<int>();
            os << '}';
        }
        os << '\n';
        const auto& q = j["quotient"];
        os << "quotient         " << q["order"].get<int>() << " vertices, "
           << (q["complete"].get<bool>() ? "complete" : "not complete") << '\n';
    }
    if (j.contains("analysis_error"))
        os << "analysis error   " << j["analysis_error"].get<std::string>() << '\n';
}

VerdictStatus theorem1_status(const TheoremVerdict& verdict)
{
    if (verdict.holds())
        return VerdictStatus::holds;
    const auto& condition = verdict.counterexample().condition;
    if (condition == "strictly Deza" || condition == "beta > 1")
        return VerdictStatus::inapplicable;
    return VerdictStatus::fails;
}

ordered_json verify_one(const Graph& g)
{
    ordered_json j;
    j["graph6"] = to_graph6(g);
    const auto verdict = verify_theorem1(g);
    j["theorem1"] = verdict.holds();
    j["status"] = to_string(theorem1_status(verdict));
    if (verdict.holds()) {
        const auto& w = verdict.witness();
        ordered_json pairs = ordered_json::array();
        for (const auto& [u, v] : w.twin_pairs)
            pairs.push_back({u, v});
        ordered_json parts = ordered_json::array();
        for (const auto& p : w.parts)
            parts.push_back(vertex_list(p));
        j["witness"] = {{"s", w.s},
                        {"t", w.t},
                        {"twin_pairs", pairs},
                        {"parts", parts},
                        {"quotient_order", w.quotient.order()},
                        {"relabeling", w.relabeling}};
    } else {
        const auto& c = verdict.counterexample();
        j["condition"] = c.condition;
        j["reason"] = c.detail;
        j["vertices"] = c.vertices;
    }

    if (const auto params = deza_parameters(g)) {
        const auto t2 = verify_theorem2(*params);
        ordered_json jt{{"parameters", params->to_string()}, {"status", to_string(t2.status)}, {"reason", t2.reason}};
        if (t2.family)
            jt["family"] = {{"s", t2.family->s}, {"t", t2.family->t}};
        j["theorem2"] = jt;
    } else {
        j["theorem2"] = nullptr;
    }

    const auto report = lemma_suite(g);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks)
        checks.push_back(
            {{"id", c.id}, {"claim", c.claim}, {"applicable", c.applicable}, {"passed", c.passed}, {"details", c.details}});
    j["lemmas"] = {{"applicable", report.applicable},
                   {"all_passed", report.applicable && report.all_passed()},
                   {"precondition_failure", report.precondition_failure},
                   {"checks", checks}};
    return j;
}

void verify_table(const ordered_json& j, std::ostream& os)
{
    os << j["graph6"].get<std::string>() << ": characterization " << j["status"].get<std::string>();
    if (j.contains("reason"))
        os << " (" << j["condition"].get<std::string>() << ": " << j["reason"].get<std::string>() << ')';
    if (j.contains("witness"))
        os << " (s = " << j["witness"]["s"].get<int>() << ", t = " << j["witness"]["t"].get<int>() << ')';
    os << '\n';
    if (!j["theorem2"].is_null()) {
        os << "  parameter recognition " << j["theorem2"]["status"].get<std::string>();
        if (const auto reason = j["theorem2"]["reason"].get<std::string>(); !reason.empty())
            os << " (" << reason << ')';
        os << '\n';
    }
    const auto& lemmas = j["lemmas"];
    if (!lemmas["applicable"].get<bool>()) {
        os << "  structural checks inapplicable: " << lemmas["precondition_failure"].get<std::string>() << '\n';
        return;
    }
    for (const auto& c : lemmas["checks"]) {
        os << "  " << (c["passed"].get<bool>() ? "pass" : "FAIL") << "  " << c["id"].get<std::string>();
        if (!c["passed"].get<bool>())
            os << ": " << c["details"].get<std::string>();
        os << '\n';
    }
}

template <typename Analyze, typename Table>
int per_graph_command(const RunConfig& config, std::ostream& out, Analyze analyze, Table table)
{
    const auto graphs = read_inputs(config);
    const Format format = format_or(config, Format::json);
    if (format == Format::graph6)
        throw ArgumentError("--format graph6 is only meaningful for construct");
    with_output(config, out, [&](std::ostream& os) {
        for (const auto& g : graphs) {
            const auto j = analyze(g);
            if (format == Format::json)
                os << j.dump() << '\n';
            else
                table(j, os);
        }
    });
    return exit_ok;
}

std::string graph_count(std::size_t count)
{
    return std::to_string(count) + (count == 1 ? " strictly Deza graph" : " strictly Deza graphs");
}

} // namespace

DezaParameters parse_parameters(const std::string& text)
{
    std::array<int, 4> values{};
    std::istringstream in(text);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::string field;
        if (!std::getline(in, field, ','))
            throw ArgumentError("--params needs four comma-separated integers n,k,b,a, got '" + text + "'");
        try {
            std::size_t used = 0;
            values[i] = std::stoi(field, &used);
            if (used != field.size())
                throw std::invalid_argument(field);
        } catch (const std::logic_error&) {
            throw ArgumentError("--params: '" + field + "' is not an integer");
        }
    }
    std::string rest;
    if (std::getline(in, rest))
        throw ArgumentError("--params needs exactly four values, got '" + text + "'");
    return {values[0], values[1], values[2], values[3]};
}

void validate(const RunConfig& config)
{
    const auto& cmd = config.subcommand;
    if (cmd == "analyze" || cmd == "verify") {
        if (config.inline_graph6.has_value() == config.input_path.has_value())
            throw ArgumentError(cmd + " needs exactly one input: an inline graph6 string or --input FILE");
    } else if (cmd == "construct") {
        const bool by_index = config.s || config.t;
        if (by_index == config.params.has_value())
            throw ArgumentError("construct needs either --s and --t, or --params n,k,b,a");
        if (by_index && !(config.s && config.t))
            throw ArgumentError("construct needs both --s and --t");
        if (config.format == Format::table)
            throw ArgumentError("construct writes graph6 or json");
    } else if (cmd == "enumerate") {
        if (!config.n)
            throw ArgumentError("enumerate needs --n");
        if (*config.n < 1)
            throw ArgumentError("--n must be positive");
        if (config.format == Format::graph6)
            throw ArgumentError("enumerate prints its summary as table or json; graph6 goes to PREFIX.g6");
    } else {
        throw ArgumentError("unknown subcommand '" + cmd + "'");
    }
    if (config.workers < 1)
        throw ArgumentError("--workers must be at least 1");
    if (config.max_order < 1 || config.max_order > hard_max_order)
        throw ArgumentError("--max-n must be in 1.." + std::to_string(hard_max_order));
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream&)
{
    return per_graph_command(config, out, analyze_one, analyze_table);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&)
{
    return per_graph_command(config, out, verify_one, verify_table);
}

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Graph g;
    DezaParameters params;
    FamilyIndex index;
    if (config.params) {
        params = *config.params;
        const auto feasibility = theorem1_feasibility(params);
        if (const auto* bad = std::get_if<Infeasible>(&feasibility)) {
            err << "infeasible: " << bad->reason << '\n';
            return exit_infeasible;
        }
        index = std::get<FamilyIndex>(feasibility);
        g = theorem1_family(index.s, index.t);
    } else {
        index = {*config.s, *config.t};
        g = theorem1_family(index.s, index.t);
        params = theorem1_parameters(index.s, index.t);
    }
    with_output(config, out, [&](std::ostream& os) {
        if (format_or(config, Format::graph6) == Format::graph6) {
            os << to_graph6(g) << '\n';
            return;
        }
        ordered_json j{{"graph6", to_graph6(g)}, {"parameters", params.to_string()}, {"s", index.s}, {"t", index.t}};
        os << j.dump() << '\n';
    });
    return exit_ok;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream&)
{
    const int n = *config.n;
    EnumerationOptions options;
    options.workers = config.workers;
    options.max_order = config.max_order;
    auto records = enumerate_strictly_deza(n, options);
    if (config.k)
        std::erase_if(records, [&](const CensusRecord& r) { return r.params.k != *config.k; });

    if (config.output) {
        std::ofstream jsonl(*config.output + ".jsonl", std::ios::binary);
        std::ofstream g6(*config.output + ".g6", std::ios::binary);
        if (!jsonl || !g6)
            throw ArgumentError("cannot write census files with prefix " + *config.output);
        for (const auto& r : records) {
            jsonl << census_to_json_line(r) << '\n';
            g6 << r.graph6 << '\n';
        }
    }

    std::map<DezaParameters, int> tally;
    for (const auto& r : records)
        ++tally[r.params];
    std::vector<std::pair<DezaParameters, int>> rows(tally.begin(), tally.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first.k < y.first.k; });

    if (format_or(config, Format::table) == Format::json) {
        ordered_json counts = ordered_json::array();
        for (const auto& [p, c] : rows)
            counts.push_back({{"parameters", p.to_string()}, {"count", c}});
        ordered_json j{{"n", n}, {"total", records.size()}, {"by_parameters", counts}};
        if (config.k)
            j["k"] = *config.k;
        out << j.dump() << '\n';
        return exit_ok;
    }
    out << "n = " << n;
    if (config.k)
        out << ", k = " << *config.k;
    out << ": " << graph_count(records.size()) << '\n';
    for (const auto& [p, c] : rows)
        out << "  " << p.to_string() << "  " << c << '\n';
    return exit_ok;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        validate(config);
        if (config.subcommand == "analyze")
            return cmd_analyze(config, out, err);
        if (config.subcommand == "construct")
            return cmd_construct(config, out, err);
        if (config.subcommand == "enumerate")
            return cmd_enumerate(config, out, err);
        return cmd_verify(config, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Deza graph analysis, construction, enumeration and verification", "deza"};
    app.require_subcommand(1);

    RunConfig config;
    config.max_order = max_order_from_environment(default_max_order);
    std::string format_text;
    std::string params_text;
    std::string inline_text;
    std::string input_text;
    std::string output_text;
    int n = 0, k = 0, s = 0, t = 0;

    const std::map<std::string, Format> formats{{"json", Format::json}, {"graph6", Format::graph6}, {"table", Format::table}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "graph6", "table"}));
    };
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("graph6", inline_text, "Inline graph6 string");
        sub->add_option("--input", input_text, "graph6 file, one graph per line ('-' for stdin)");
        sub->add_option("--output", output_text, "Write the report to this file");
        add_format(sub);
    };

    auto* analyze = app.add_subcommand("analyze", "Report parameters, vertex types and rho classes");
    add_io(analyze);
    auto* verify = app.add_subcommand("verify", "Check the characterization and structural claims");
    add_io(verify);

    auto* construct = app.add_subcommand("construct", "Build the 2-clique extension of a complete multipartite graph");
    construct->add_option("--s", s, "Number of parts");
    construct->add_option("--t", t, "Part size");
    construct->add_option("--params", params_text, "Parameter quadruple n,k,b,a");
    construct->add_option("--output", output_text, "Write to this file");
    add_format(construct);

    auto* enumerate = app.add_subcommand("enumerate", "List all strictly Deza graphs on n vertices");
    enumerate->add_option("--n", n, "Number of vertices")->required();
    enumerate->add_option("--k", k, "Keep only degree k");
    enumerate->add_option("--output", output_text, "Write PREFIX.jsonl and PREFIX.g6");
    enumerate->add_option("--workers", config.workers, "Worker threads");
    enumerate->add_option("--max-n", config.max_order, "Largest n accepted (default 12, or DEZA_MAX_N)");
    add_format(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    for (auto* sub : app.get_subcommands())
        config.subcommand = sub->get_name();
    auto given = [&](const char* name) {
        for (auto* sub : app.get_subcommands())
            if (auto* opt = sub->get_option_no_throw(name); opt && opt->count() > 0)
                return true;
        return false;
    };
    try {
        if (given("graph6"))
            config.inline_graph6 = inline_text;
        if (given("--input"))
            config.input_path = input_text;
        if (given("--output"))
            config.output = output_text;
        if (given("--format"))
            config.format = formats.at(format_text);
        if (given("--params"))
            config.params = parse_parameters(params_text);
        if (given("--n"))
            config.n = n;
        if (given("--k"))
            config.k = k;
        if (given("--s"))
            config.s = s;
        if (given("--t"))
            config.t = t;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return execute(config, out, err);
}

} // namespace deza::cli
