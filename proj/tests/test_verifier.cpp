#include <doctest.h>

#include "deza/constructions.hpp"
#include "deza/verifier.hpp"
#include "oracles.hpp"

using namespace deza;

TEST_CASE("the family satisfies the characterization")
{
    const auto verdict = verify_theorem1(theorem1_family(3, 3));
    REQUIRE(verdict.holds());
    const auto& w = verdict.witness();
    CHECK(w.s == 3);
    CHECK(w.t == 3);
    CHECK(w.parts.size() == 3);
    for (const auto& part : w.parts)
        CHECK(part.size() == 6);
    CHECK(w.twin_pairs.size() == 9);
    CHECK(w.quotient == complete_graph(3));
    CHECK(theorem1_family(3, 3).relabeled(w.relabeling) == theorem1_family(3, 3));
}

TEST_CASE("relabeled family members are recognized and mapped back")
{
    std::mt19937 rng(23);
    for (int s = 2; s <= 4; ++s)
        for (int t = 2; t <= 4; ++t) {
            const Graph g = theorem1_family(s, t).relabeled(oracle::random_permutation(2 * s * t, rng));
            const auto verdict = verify_theorem1(g);
            REQUIRE(verdict.holds());
            CHECK(oracle::matrix_of(g.relabeled(verdict.witness().relabeling)) == oracle::family(s, t));
        }
}

TEST_CASE("negative verdicts name the failed condition")
{
    const auto petersen = verify_theorem1(petersen_graph());
    REQUIRE_FALSE(petersen.holds());
    CHECK(petersen.counterexample().condition == "strictly Deza");
    CHECK(petersen.counterexample().detail == "strongly regular");

    const auto c6 = verify_theorem1(cycle_graph(6));
    REQUIRE_FALSE(c6.holds());
    CHECK(c6.counterexample().detail == "diameter 3");
}

TEST_CASE("parameter recognition")
{
    const auto ok = verify_theorem2({8, 5, 4, 2});
    CHECK(ok.status == VerdictStatus::holds);
    REQUIRE(ok.family);
    CHECK(*ok.family == FamilyIndex{2, 2});

    const auto bad = verify_theorem2({12, 9, 8, 5});
    CHECK(bad.status == VerdictStatus::fails);
    CHECK(bad.reason == "a != 2k - n (5 != 6)");

    // beta = 8 but n - k + 1 = 2 gives parts of size 1, and a = k - 2.
    CHECK(verify_theorem2({9, 8, 7, 6}).status != VerdictStatus::holds);
    CHECK(verify_theorem2({10, 3, 1, 0}).status == VerdictStatus::inapplicable);
    CHECK(verify_theorem2({10, 5, 4, 2}).status == VerdictStatus::inapplicable);
}

TEST_CASE("structural check suite")
{
    for (const auto& [s, t] : std::vector<std::pair<int, int>>{{2, 3}, {4, 2}, {2, 2}, {3, 4}}) {
        const auto report = lemma_suite(theorem1_family(s, t));
        CHECK(report.applicable);
        CHECK(report.all_passed());
        REQUIRE(report.find("type_census"));
        CHECK(report.find("type_census")->passed);
        CHECK(report.find("no_type_a1")->applicable);
    }
    const auto srg = lemma_suite(petersen_graph());
    CHECK_FALSE(srg.applicable);
    CHECK(srg.precondition_failure.find("strongly regular") != std::string::npos);
    for (const auto& c : srg.checks)
        CHECK_FALSE(c.applicable);
}
