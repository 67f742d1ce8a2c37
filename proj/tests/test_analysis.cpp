#include <doctest.h>

#include "deza/analysis.hpp"
#include "deza/constructions.hpp"
#include "deza/errors.hpp"
#include "oracles.hpp"

using namespace deza;

namespace {

Graph k33() { return complete_multipartite(MultipartiteShape::uniform(2, 3)); }

Graph prism()
{
    const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
    return Graph::from_edges(6, edges);
}

} // namespace

TEST_CASE("Deza parameters")
{
    CHECK(deza_parameters(cycle_graph(5)) == DezaParameters{5, 2, 1, 0});
    CHECK(deza_parameters(k33()) == DezaParameters{6, 3, 3, 0});
    CHECK_FALSE(deza_parameters(path_graph(4)));
    CHECK_FALSE(deza_parameters(empty_graph(3)));
    CHECK(deza_parameters(complete_graph(4)) == DezaParameters{4, 3, 2, 2});
    CHECK(DezaParameters{8, 5, 4, 2}.to_string() == "(8,5,4,2)");

    for (const Graph& g : {cycle_graph(5), k33(), prism(), petersen_graph(), theorem1_family(2, 2)}) {
        const auto expected = oracle::deza(oracle::matrix_of(g));
        const auto got = deza_parameters(g);
        REQUIRE(got.has_value() == expected.has_value());
        if (got)
            CHECK(oracle::Deza{got->n, got->k, got->b, got->a} == *expected);
    }
}

TEST_CASE("strongly regular recognition")
{
    CHECK(is_strongly_regular(cycle_graph(5)) == SrgParameters{5, 2, 0, 1});
    CHECK(is_strongly_regular(petersen_graph()) == SrgParameters{10, 3, 0, 1});
    CHECK(is_strongly_regular(complete_graph(5)) == SrgParameters{5, 4, 3, 0});
    CHECK_FALSE(is_strongly_regular(theorem1_family(2, 2)));
    CHECK_FALSE(is_strongly_regular(prism()));
}

TEST_CASE("strictly Deza recognition")
{
    CHECK_FALSE(is_strictly_deza(cycle_graph(5)));
    CHECK(strictly_deza_failure(cycle_graph(5)) == "strongly regular");
    CHECK(strictly_deza_failure(cycle_graph(6)) == "diameter 3");
    CHECK(strictly_deza_failure(path_graph(4)) == "not regular");
    CHECK(is_strictly_deza(theorem1_family(2, 2)));
    CHECK(oracle::strictly_deza(oracle::matrix_of(theorem1_family(2, 2))));
}

TEST_CASE("no strictly Deza graph on at most 7 vertices, checked over all labeled graphs")
{
    for (int n = 1; n <= 6; ++n)
        oracle::for_each_labeled_graph(n, [&](const oracle::Matrix& m) {
            if (oracle::degree_if_regular(m))
                CHECK_FALSE(is_strictly_deza(oracle::graph_of(m)));
        });
}

TEST_CASE("vertex profiles")
{
    const Graph f = theorem1_family(2, 2);
    const DezaParameters p{8, 5, 4, 2};
    const auto m = oracle::matrix_of(f);
    for (Vertex v = 0; v < 8; ++v) {
        const auto profile = vertex_profile(f, p, v);
        CHECK(profile.beta == 3);
        CHECK(profile.beta == oracle::partners(m, v, 4));
        CHECK(profile.alpha == oracle::partners(m, v, 2));
        CHECK(profile.alpha + profile.beta + 1 == 8);
        CHECK(profile.closed_b().contains(v));
    }
    const auto c5 = vertex_profile(cycle_graph(5), {5, 2, 1, 0}, 0);
    CHECK(c5.alpha == 2);
    CHECK(c5.beta == 2);
    CHECK_THROWS_AS(vertex_profile(complete_graph(4), {4, 3, 2, 2}, 0), PreconditionError);
}

TEST_CASE("beta from parameters")
{
    CHECK(beta_by_formula({8, 5, 4, 2}) == Rational(3));
    CHECK(beta_by_formula({5, 2, 1, 0}) == Rational(2));
    CHECK(beta_by_formula({9, 8, 7, 6}) == Rational(8));
    CHECK(beta_by_formula({10, 4, 3, 1}).to_string() == "3/2");
    CHECK_THROWS_AS(beta_by_formula({4, 3, 2, 2}), std::domain_error);
}

TEST_CASE("vertex classification on the family")
{
    for (int s = 2; s <= 4; ++s)
        for (int t = 2; t <= 3; ++t) {
            const Graph g = theorem1_family(s, t);
            const auto p = *deza_parameters(g);
            const auto m = oracle::matrix_of(g);
            for (Vertex v = 0; v < g.order(); ++v) {
                const auto type = classify_vertex(g, p, v);
                CHECK(type.kind == VertexKind::C);
                REQUIRE(type.star.has_value());
                CHECK(*type.star == (v ^ 1));
                // twins: identical closed neighbourhoods
                auto closed = m[v];
                closed[v] = 1;
                auto other = m[*type.star];
                other[*type.star] = 1;
                CHECK(closed == other);
            }
            const auto census = type_census(classify_vertices(g, p));
            CHECK(census == TypeCensus{0, 0, 0, g.order()});
        }
}

TEST_CASE("classification needs the standing hypothesis")
{
    CHECK_THROWS_AS(classify_vertex(petersen_graph(), {10, 3, 1, 0}, 0), PreconditionError);
    CHECK_THROWS_AS(classify_vertex(theorem1_family(2, 2), {8, 5, 4, 1}, 0), PreconditionError);
    CHECK(standing_hypothesis_failure(petersen_graph())->starts_with("not strictly Deza"));
}

TEST_CASE("rho partition and quotient")
{
    const Graph f22 = theorem1_family(2, 2);
    const auto p22 = *deza_parameters(f22);
    const auto rho22 = rho_partition(f22, p22);
    CHECK(rho22.classes.size() == 2);
    for (const auto& c : rho22.classes) {
        CHECK(c.size() == 4);
        for (Vertex v : c)
            CHECK(vertex_profile(f22, p22, v).closed_b() == c);
    }
    CHECK(quotient_graph(f22, rho22) == complete_graph(2));

    const Graph f32 = theorem1_family(3, 2);
    const auto p32 = *deza_parameters(f32);
    const auto rho32 = rho_partition(f32, p32);
    CHECK(rho32.classes.size() == 3);
    for (const auto& c : rho32.classes)
        CHECK(c.size() == 4);
    for (Vertex v = 0; v < 12; ++v)
        CHECK(rho32.classes[rho32.class_of[v]].contains(v));
    CHECK(quotient_graph(f32, rho32) == complete_graph(3));
}

TEST_CASE("quotient rejects inconsistent classes")
{
    RhoPartition bad;
    bad.classes = {VertexSet(0b0011), VertexSet(0b1100)};
    bad.class_of = {0, 0, 1, 1};
    CHECK_THROWS_AS(quotient_graph(path_graph(4), bad), ContradictionError);
}
