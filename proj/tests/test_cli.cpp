#include <doctest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "deza/cli.hpp"
#include "deza/constructions.hpp"
#include "deza/graph6.hpp"

using namespace deza;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "deza");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool contains(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

} // namespace

TEST_CASE("analyze reports")
{
    const auto family = run_cli({"analyze", to_graph6(theorem1_family(2, 2))});
    CHECK(family.code == cli::exit_ok);
    CHECK(contains(family.out, "\"parameters\":\"(8,5,4,2)\""));
    CHECK(contains(family.out, "\"strictly_deza\":true"));
    CHECK(contains(family.out, "\"types\":{\"C\":8}"));

    const auto petersen = run_cli({"analyze", to_graph6(petersen_graph())});
    CHECK(petersen.code == cli::exit_ok);
    CHECK(contains(petersen.out, "\"strongly_regular\":true"));
    CHECK(contains(petersen.out, "\"strictly_deza\":false"));

    const auto table = run_cli({"analyze", to_graph6(theorem1_family(2, 2)), "--format", "table"});
    CHECK(contains(table.out, "types            C=8"));

    const auto bad = run_cli({"analyze", "x!!"});
    CHECK(bad.code == cli::exit_usage);
    CHECK(contains(bad.err, "line 1: invalid graph6"));
}

TEST_CASE("construct")
{
    const auto by_index = run_cli({"construct", "--s", "2", "--t", "2"});
    CHECK(by_index.code == cli::exit_ok);
    CHECK(from_graph6(by_index.out.substr(0, by_index.out.size() - 1)).order() == 8);
    const auto by_params = run_cli({"construct", "--params", "8,5,4,2"});
    CHECK(by_params.out == by_index.out);

    const auto infeasible = run_cli({"construct", "--params", "10,9,8,7"});
    CHECK(infeasible.code == cli::exit_infeasible);
    CHECK(contains(infeasible.err, "a = k-2 impossible"));

    CHECK(run_cli({"construct", "--s", "2"}).code == cli::exit_usage);
    CHECK(run_cli({"construct", "--s", "1", "--t", "2"}).code == cli::exit_usage);
    CHECK(run_cli({"construct", "--params", "8,5,4"}).code == cli::exit_usage);
    CHECK(run_cli({"construct", "--s", "2", "--t", "2", "--params", "8,5,4,2"}).code == cli::exit_usage);
}

TEST_CASE("verify")
{
    const auto family = run_cli({"verify", to_graph6(theorem1_family(3, 2))});
    CHECK(family.code == cli::exit_ok);
    CHECK(contains(family.out, "\"theorem1\":true"));
    CHECK(contains(family.out, "\"all_passed\":true"));
    CHECK_FALSE(contains(family.out, "\"passed\":false"));

    const auto c6 = run_cli({"verify", to_graph6(cycle_graph(6))});
    CHECK(contains(c6.out, "\"theorem1\":false"));
    CHECK(contains(c6.out, "\"reason\":\"diameter 3\""));

    const auto k33 = run_cli({"verify", to_graph6(complete_multipartite(MultipartiteShape::uniform(2, 3)))});
    CHECK(contains(k33.out, "\"status\":\"inapplicable\""));
    CHECK(contains(k33.out, "\"reason\":\"strongly regular\""));

    CHECK(run_cli({"verify"}).code == cli::exit_usage);
}

TEST_CASE("construct output verifies for every small family member")
{
    for (int s = 2; s <= 4; ++s)
        for (int t = 2; t <= 4; ++t) {
            const auto built = run_cli({"construct", "--s", std::to_string(s), "--t", std::to_string(t)});
            const std::string path = "cli_pipe_" + std::to_string(s) + std::to_string(t) + ".g6";
            std::ofstream(path) << built.out;
            const auto checked = run_cli({"verify", "--input", path});
            CHECK(contains(checked.out, "\"theorem1\":true"));
            std::remove(path.c_str());
        }
}

TEST_CASE("enumerate")
{
    const auto seven = run_cli({"enumerate", "--n", "7"});
    CHECK(seven.code == cli::exit_ok);
    CHECK(contains(seven.out, "0 strictly Deza graphs"));

    const auto eight = run_cli({"enumerate", "--n", "8", "--output", "cli_census_a"});
    CHECK(contains(eight.out, "(8,5,4,2)"));
    const auto again = run_cli({"enumerate", "--n", "8", "--output", "cli_census_b", "--workers", "3"});
    CHECK(eight.out == again.out);
    CHECK(slurp("cli_census_a.jsonl") == slurp("cli_census_b.jsonl"));
    CHECK(slurp("cli_census_a.g6") == slurp("cli_census_b.g6"));
    CHECK_FALSE(slurp("cli_census_a.jsonl").empty());
    for (const char* f : {"cli_census_a.jsonl", "cli_census_a.g6", "cli_census_b.jsonl", "cli_census_b.g6"})
        std::remove(f);

    const auto too_big = run_cli({"enumerate", "--n", "13"});
    CHECK(too_big.code == cli::exit_usage);
    CHECK(contains(too_big.err, "--max-n"));
    CHECK(run_cli({"enumerate", "--n", "8", "--workers", "0"}).code == cli::exit_usage);
    CHECK(run_cli({"enumerate"}).code == cli::exit_usage);
}

TEST_CASE("parameter parsing")
{
    CHECK(cli::parse_parameters("8,5,4,2") == DezaParameters{8, 5, 4, 2});
    CHECK_THROWS(cli::parse_parameters("8,5,4"));
    CHECK_THROWS(cli::parse_parameters("8,5,4,2,1"));
    CHECK_THROWS(cli::parse_parameters("8,x,4,2"));
}
