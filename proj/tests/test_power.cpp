#include <catch2/catch_amalgamated.hpp>

#include "parkideal/errors.hpp"
#include "parkideal/power_ideal.hpp"
#include "parkideal/standard_monomials.hpp"

using namespace parkideal;

namespace {

Graph k5_minus_12()  // the two-case comparison graph: K_5 without the edge {1,2}
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("expanded powers of linear forms")
{
    const HomogeneousPoly p = HomogeneousPoly::linear_power(4, {1, 2}, 6);
    CHECK(p.degree() == 6);
    CHECK(p.terms().size() == 7);
    CHECK(p.terms().at({3, 3, 0, 0}) == 20);
    CHECK(p.terms().at({6, 0, 0, 0}) == 1);

    const HomogeneousPoly q = HomogeneousPoly::linear_power(3, {1, 2, 3}, 3);
    CHECK(q.terms().at({1, 1, 1}) == 6);
    CHECK(q.terms().size() == 10);
}

TEST_CASE("power ideal generators")
{
    // pure powers for k = 0
    const auto k4_gens = power_ideal_gens(Graph::complete(4), 0);
    REQUIRE(k4_gens.size() == 3);
    for (const auto& gen : k4_gens)
    {
        CHECK(gen.terms().size() == 1);
        CHECK(gen.degree() == 3);
    }

    const Graph g = k5_minus_12();
    const auto pair_12 = HomogeneousPoly::linear_power(4, {1, 2}, 6);
    const auto gens2 = power_ideal_gens(g, 2);
    CHECK(gens2.size() == 14);
    CHECK(std::any_of(gens2.begin(), gens2.end(),
                      [&](const HomogeneousPoly& p) { return p.terms() == pair_12.terms(); }));

    // the matching monomial skeleton has 13 minimal generators
    CHECK(skeleton_ideal(g, 2).generators().size() == 13);
}

TEST_CASE("graded dimensions")
{
    const Graph g = k5_minus_12();
    const auto m_gens = ideal_as_polys(skeleton_ideal(g, 2));
    const auto j_gens = power_ideal_gens(g, 2);
    CHECK(hilbert_dim(4, m_gens, 0) == 1);
    CHECK(hilbert_dim(4, j_gens, 0) == 1);

    // the two quotients agree except in degree 6
    for (int d = 0; d <= socle_bound(g); ++d)
    {
        const Int dim_m = hilbert_dim(4, m_gens, d);
        const Int dim_j = hilbert_dim(4, j_gens, d);
        if (d == 6)
        {
            CHECK(dim_m == 7);
            CHECK(dim_j == 6);
        }
        else
        {
            CHECK(dim_m == dim_j);
        }
    }

    // artinian quotients vanish past the socle bound
    CHECK(hilbert_dim(4, m_gens, socle_bound(g)) == 0);
    CHECK(hilbert_dim(4, j_gens, socle_bound(g) + 1) == 0);
}

TEST_CASE("monomial route matches the box count degreewise")
{
    for (const MonomialIdeal& ideal :
         {skeleton_ideal(Graph::complete(4), 1), skeleton_ideal(k5_minus_12(), 2)})
    {
        const auto gf = degree_generating_function(ideal);
        const auto polys = ideal_as_polys(ideal);
        for (int d = 0; d <= gf.degree() + 1; ++d)
            CHECK(hilbert_dim(ideal.variable_count(), polys, d) == gf.coefficient(d));
    }
}

TEST_CASE("graded equality of the two skeleta")
{
    const Graph k4 = Graph::complete(4);
    CHECK(graded_ideal_equal(3, ideal_as_polys(skeleton_ideal(k4, 1)), power_ideal_gens(k4, 1),
                             socle_bound(k4)));
    // k = 0: the generator sets are literally identical
    CHECK(graded_ideal_equal(3, ideal_as_polys(skeleton_ideal(k4, 0)), power_ideal_gens(k4, 0),
                             socle_bound(k4)));

    const Graph g = k5_minus_12();
    CHECK_FALSE(graded_ideal_equal(4, ideal_as_polys(skeleton_ideal(g, 2)),
                                   power_ideal_gens(g, 2), socle_bound(g)));
}

TEST_CASE("one-skeleton equality on a sample of irregular graphs")
{
    for (const Graph& g :
         {k5_minus_12(), Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}),
          Graph(4, {{0, 1}, {1, 2}, {2, 3}}), Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})})
        CHECK(graded_ideal_equal(g.non_sink_count(), ideal_as_polys(skeleton_ideal(g, 1)),
                                 power_ideal_gens(g, 1), socle_bound(g)));
}

TEST_CASE("full parking and power quotients share their Hilbert function")
{
    for (const Graph& g : {Graph::complete(4), Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                           Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}})})
    {
        const int n = g.non_sink_count();
        const auto m_gens = ideal_as_polys(skeleton_ideal(g, n - 1));
        const auto j_gens = power_ideal_gens(g, n - 1);
        for (int d = 0; d <= socle_bound(g); ++d)
            CHECK(hilbert_dim(n, m_gens, d) == hilbert_dim(n, j_gens, d));
    }
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(HomogeneousPoly(2, {{{1, 0}, Int(1)}, {{2, 0}, Int(1)}}), InputError);
    CHECK_THROWS_AS(HomogeneousPoly(2, {}), InputError);
    CHECK_THROWS_AS(power_ideal_gens(Graph::complete(4), 5), InputError);
    CHECK_THROWS_AS(hilbert_dim(2, {}, -1), InputError);
    // combinatorial blowup guard
    CHECK_THROWS_AS(hilbert_dim(12, {}, 40), ResourceError);
}
