#include <catch2/catch_amalgamated.hpp>

#include "parkideal/errors.hpp"
#include "parkideal/graph.hpp"
#include "parkideal/intmatrix.hpp"

using namespace parkideal;

namespace {

Graph k5_minus_34()
{
    // complete graph on {0..4} without the edge {3,4}
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

Graph k5_minus_01()
{
    return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

// every connected graph on `vertex_count` labeled vertices
std::vector<Graph> connected_graphs(int vertex_count)
{
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < vertex_count; ++i)
        for (int j = i + 1; j < vertex_count; ++j)
            all_edges.push_back({i, j});
    std::vector<Graph> graphs;
    for (std::uint32_t mask = 0; mask < (1u << all_edges.size()); ++mask)
    {
        std::vector<std::pair<int, int>> edges;
        for (size_t e = 0; e < all_edges.size(); ++e)
            if (mask & (1u << e))
                edges.push_back(all_edges[e]);
        Graph g(vertex_count, edges);
        if (g.is_connected())
            graphs.push_back(std::move(g));
    }
    return graphs;
}

}  // namespace

TEST_CASE("degree")
{
    CHECK(Graph::complete(5).degree(1) == 4);
    CHECK(k5_minus_34().degree(3) == 3);
    CHECK(Graph::complete(4).degree(0) == 3);
}

TEST_CASE("out-degree toward the complement of sigma")
{
    const Graph k4 = Graph::complete(4);
    CHECK(k4.out_degree({1}, 1) == 3);
    CHECK(Graph::complete(5).out_degree({1, 2}, 1) == 3);
    CHECK(k4.out_degree({1, 2, 3}, 2) == 1);

    CHECK_THROWS_AS(k4.out_degree({1, 2}, 3), InputError);
    CHECK_THROWS_AS(k4.out_degree(std::vector<int>{}, 1), InputError);

    // singleton sets recover the degree
    for (int v = 1; v <= 3; ++v)
        CHECK(k4.out_degree(std::vector<int>{v}, v) == k4.degree(v));
}

TEST_CASE("reduced laplacians")
{
    const IntMatrix q = reduced_signless_laplacian(Graph::complete(4));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(q.at(i, j) == (i == j ? 3 : 1));

    const IntMatrix qh = reduced_signless_laplacian(k5_minus_34());
    const int expected[4][4] = {{4, 1, 1, 1}, {1, 4, 1, 1}, {1, 1, 3, 0}, {1, 1, 0, 3}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(qh.at(i, j) == expected[i][j]);

    const IntMatrix l = reduced_laplacian(Graph(2, {{0, 1}}));
    REQUIRE(l.dim() == 1);
    CHECK(l.at(0, 0) == 1);
}

TEST_CASE("exact determinants")
{
    CHECK(det_exact(reduced_signless_laplacian(Graph::complete(4))) == 20);
    CHECK(det_exact(reduced_signless_laplacian(k5_minus_34())) == 99);
    CHECK(det_exact(reduced_signless_laplacian(k5_minus_01())) == 135);
    CHECK(det_exact(IntMatrix::identity(3)) == 1);

    // row swaps and zero pivots
    IntMatrix m(3);
    m.at(0, 1) = 2;
    m.at(1, 0) = 1;
    m.at(2, 2) = 5;
    CHECK(det_exact(m) == -10);
    IntMatrix singular(2);
    singular.at(0, 0) = 1;
    singular.at(0, 1) = 2;
    singular.at(1, 0) = 2;
    singular.at(1, 1) = 4;
    CHECK(det_exact(singular) == 0);
}

TEST_CASE("spanning tree counts")
{
    CHECK(spanning_tree_count(Graph::complete(4)) == 16);
    CHECK(spanning_tree_count(Graph::complete(5)) == 125);
    CHECK(spanning_tree_count(Graph(3, {{0, 1}, {1, 2}})) == 1);

    // determinant route agrees with brute-force enumeration
    for (const Graph& g : connected_graphs(5))
        CHECK(spanning_tree_count(g) == spanning_tree_count_brute_force(g));
}

TEST_CASE("laplacian determinant is independent of the deleted vertex")
{
    for (const Graph& g : {Graph::complete(5), k5_minus_34(), k5_minus_01()})
    {
        const Int reference = det_exact(laplacian_minor(g, 0));
        for (int v = 1; v < g.vertex_count(); ++v)
            CHECK(det_exact(laplacian_minor(g, v)) == reference);
    }
}

TEST_CASE("weighted count of odd-unicyclic spanning subgraphs")
{
    CHECK(tu_weighted_count(Graph::complete(4)) == 20);
    CHECK(tu_weighted_count(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) == 1);
    // matches the signless determinant, including off the complete family
    CHECK(tu_weighted_count(k5_minus_34()) ==
          det_exact(reduced_signless_laplacian(k5_minus_34())));

    for (const Graph& g : connected_graphs(5))
        CHECK(tu_weighted_count(g) == det_exact(reduced_signless_laplacian(g)));

    CHECK_THROWS_AS(tu_weighted_count(Graph::complete(8)), ResourceError);
}

TEST_CASE("graph construction rejects bad input")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), InputError);
    CHECK_THROWS_AS(Graph(0, {}), InputError);
}

TEST_CASE("edge-list parser")
{
    const Graph g = Graph::parse_text("# a triangle plus a pendant\n0 1\n1 2\n0 2\n\n2 3 # comment\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(2, 3));

    CHECK_THROWS_AS(Graph::parse_text("0 1\n0 1\n"), InputError);
    CHECK_THROWS_AS(Graph::parse_text("1 1\n"), InputError);
    CHECK_THROWS_AS(Graph::parse_text("0\n"), InputError);
    CHECK_THROWS_AS(Graph::parse_text("0 1 2\n"), InputError);

    const Graph k6 = Graph::from_spec("complete:6");
    CHECK(k6.vertex_count() == 6);
    CHECK(k6.edge_count() == 15);
    CHECK_THROWS_AS(Graph::from_spec("complete:x"), InputError);
    CHECK_THROWS_AS(Graph::from_spec("/nonexistent/file"), InputError);
}
