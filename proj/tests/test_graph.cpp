#include <doctest.h>

#include <random>

#include "deza/errors.hpp"
#include "deza/graph.hpp"
#include "oracles.hpp"

using namespace deza;

namespace {

Graph star_graph(int leaves)
{
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        b.add_edge(0, v);
    return b.build();
}

Graph random_graph(int n, std::mt19937& rng)
{
    GraphBuilder b(n);
    std::bernoulli_distribution coin(0.4);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return b.build();
}

} // namespace

TEST_CASE("common neighbour counts")
{
    CHECK(common_neighbors(cycle_graph(4), 0, 2) == 2);
    const Graph k4 = complete_graph(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(common_neighbors(k4, u, v) == 2);

    const Graph petersen = petersen_graph();
    const auto m = oracle::matrix_of(petersen);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            CHECK(common_neighbors(petersen, u, v) == oracle::common(m, u, v));
            CHECK(common_neighbors(petersen, u, v) == (petersen.adjacent(u, v) ? 0 : 1));
        }
}

TEST_CASE("common neighbour argument errors")
{
    const Graph c5 = cycle_graph(5);
    CHECK_THROWS_AS(common_neighbors(c5, 1, 1), ArgumentError);
    CHECK_THROWS_AS(common_neighbors(c5, 0, 5), ArgumentError);
    CHECK_THROWS_AS(common_neighbors(c5, -1, 2), ArgumentError);
    CHECK_THROWS_AS(neighborhood(c5, 7), ArgumentError);
}

TEST_CASE("neighbourhoods")
{
    const Graph p3 = path_graph(3);
    CHECK(second_neighborhood(p3, 0) == VertexSet::single(2));
    CHECK(closed_neighborhood(p3, 1) == VertexSet(0b111));
    for (int v = 0; v < 4; ++v)
        CHECK(second_neighborhood(complete_graph(4), v).empty());
    for (int v = 0; v < 5; ++v)
        CHECK(second_neighborhood(cycle_graph(5), v).size() == 2);
}

TEST_CASE("regular degree")
{
    CHECK(regular_degree(cycle_graph(5)) == 2);
    CHECK_FALSE(regular_degree(star_graph(3)));
    CHECK_FALSE(regular_degree(empty_graph(4)));
    CHECK(regular_degree(petersen_graph()) == 3);
}

TEST_CASE("diameter")
{
    CHECK(diameter(complete_graph(4)) == 1);
    CHECK(diameter(cycle_graph(5)) == 2);
    CHECK(diameter(cycle_graph(6)) == 3);
    const std::vector<std::pair<int, int>> two_edges{{0, 1}, {2, 3}};
    CHECK_FALSE(diameter(Graph::from_edges(4, two_edges)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, two_edges)));
}

TEST_CASE("complement")
{
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    CHECK(oracle::isomorphic(oracle::matrix_of(complement(cycle_graph(5))), oracle::matrix_of(cycle_graph(5))));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(1 + trial % 20, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("graph invariants on random graphs")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(2 + trial % 30, rng);
        const auto m = oracle::matrix_of(g);
        int degree_sum = 0;
        for (int v = 0; v < g.order(); ++v) {
            degree_sum += neighborhood(g, v).size();
            CHECK_FALSE(g.adjacent(v, v));
            for (int u = 0; u < g.order(); ++u) {
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                if (u != v)
                    CHECK(common_neighbors(g, u, v) == oracle::common(m, u, v));
            }
        }
        CHECK(degree_sum == 2 * g.edge_count());
        const int d = oracle::diameter(m);
        CHECK(diameter(g) == (d < 0 ? std::nullopt : std::optional<int>(d)));
    }
}

TEST_CASE("graph construction rejects bad input")
{
    const std::vector<std::pair<int, int>> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), ArgumentError);
    const std::vector<std::pair<int, int>> far{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, far), ArgumentError);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), ArgumentError);
    CHECK_THROWS_AS(Graph::from_rows({0b10, 0b00}), ArgumentError);
}

TEST_CASE("relabeling and induced subgraphs")
{
    const Graph p3 = path_graph(3);
    const std::vector<Vertex> image{1, 0, 2};
    const Graph moved = p3.relabeled(image);
    CHECK(moved.adjacent(1, 0));
    CHECK(moved.adjacent(0, 2));
    CHECK_FALSE(moved.adjacent(1, 2));
    CHECK(induced_subgraph(complete_graph(5), VertexSet(0b10101)) == complete_graph(3));
}

TEST_CASE("petersen graph")
{
    const Graph p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(diameter(p) == 2);
}
