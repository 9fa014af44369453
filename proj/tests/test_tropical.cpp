#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "parkideal/errors.hpp"
#include "parkideal/linalg.hpp"
#include "parkideal/tropical.hpp"

using namespace parkideal;

namespace {

// the planar figure arrangement: apexes (1,1) and (3,0)
Arrangement figure_arrangement()
{
    return Arrangement(3, {Rat(1), Rat(1)}, {Rat(3), Rat(0)});
}

Graph cone_minus_two_edges()  // K_4 minus {1,2},{3,4}, coned at the sink
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

Graph cone_minus_triangle()  // K_4 minus the triangle {1,2,3}, coned at the sink
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

TypePair make_type(const std::vector<int>& ta, const std::vector<int>& tb, int n)
{
    return {labels_to_mask(ta, n), labels_to_mask(tb, n)};
}

int count_of_dim(const CellComplex& complex, int dim)
{
    int count = 0;
    for (const Cell& cell : complex.cells())
        if (cell.dim == dim)
            ++count;
    return count;
}

// affine dimension of a cell's equality system, by exact rank
int dimension_by_rank(const TypePair& type, int n)
{
    std::vector<std::vector<Rat>> rows;
    auto add_side = [&](std::uint32_t mask)
    {
        const auto labels = mask_to_labels(mask);
        for (size_t t = 1; t < labels.size(); ++t)
        {
            std::vector<Rat> row(n - 1, 0);
            // tie x_{labels[0]} - x_{labels[t]} = const; coordinate n is the fixed 0
            if (labels[0] <= n - 1)
                row[labels[0] - 1] += 1;
            if (labels[t] <= n - 1)
                row[labels[t] - 1] -= 1;
            rows.push_back(std::move(row));
        }
    };
    add_side(type.a_mask);
    add_side(type.b_mask);
    if (rows.empty())
        return n - 1;
    return (n - 1) - rank_rational(rows);
}

}  // namespace

TEST_CASE("types of points in the figure arrangement")
{
    const Arrangement arr = figure_arrangement();
    CHECK(type_of_point(arr, {Rat(2), Rat(0)}) == make_type({1}, {2, 3}, 3));
    CHECK(type_of_point(arr, {Rat(2), Rat(-1)}) == make_type({1}, {3}, 3));
    CHECK(type_of_point(arr, {Rat(1), Rat(1, 2)}) == make_type({1, 3}, {2}, 3));
}

TEST_CASE("cell counts of a generic planar arrangement")
{
    const CellComplex complex = enumerate_cells(figure_arrangement());
    CHECK(count_of_dim(complex, 2) == 6);
    CHECK(count_of_dim(complex, 1) == 8);
    CHECK(count_of_dim(complex, 0) == 3);
    CHECK(complex.is_generic());

    // the same counts arise from the staircase apex
    const CellComplex standard = enumerate_cells(Arrangement::standard_generic(3));
    CHECK(standard.cells().size() == 17);
    CHECK(standard.is_generic());
}

TEST_CASE("generic cell counts for n = 4 match the formula totals")
{
    const CellComplex complex = enumerate_cells(Arrangement::standard_generic(4));
    CHECK(count_of_dim(complex, 3) == 10);
    CHECK(count_of_dim(complex, 2) == 20);
    CHECK(count_of_dim(complex, 1) == 15);
    CHECK(count_of_dim(complex, 0) == 4);
    CHECK(complex.is_generic());
}

TEST_CASE("coincident apexes collapse to a single hyperplane")
{
    const Arrangement arr(3, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
    const CellComplex complex = enumerate_cells(arr);
    for (const Cell& cell : complex.cells())
        CHECK(cell.type.a_mask == cell.type.b_mask);
    CHECK_FALSE(complex.is_generic());
}

TEST_CASE("witnesses realize their types exactly")
{
    for (const auto& arr : {figure_arrangement(), Arrangement::standard_generic(4)})
    {
        const CellComplex complex = enumerate_cells(arr);
        for (const Cell& cell : complex.cells())
            CHECK(type_of_point(arr, cell.witness) == cell.type);
    }
}

TEST_CASE("tie-graph dimension equals the rank of the equality system")
{
    for (const auto& arr :
         {figure_arrangement(), Arrangement::standard_generic(4),
          Arrangement(4, {Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)})})
    {
        const CellComplex complex = enumerate_cells(arr);
        for (const Cell& cell : complex.cells())
            CHECK(cell.dim == dimension_by_rank(cell.type, arr.n()));
    }
}

TEST_CASE("monomial labels")
{
    const Graph k4 = Graph::complete(4);
    Cell cell;
    cell.type = make_type({1}, {3}, 3);
    CHECK(monomial_label(cell, k4) == Monomial({2, 0, 2}));
    cell.type = make_type({1, 3}, {2}, 3);
    CHECK(monomial_label(cell, k4) == Monomial({2, 2, 2}));
    cell.type = make_type({2}, {2}, 3);
    CHECK(monomial_label(cell, k4) == Monomial({0, 3, 0}));

    // general graphs label by their own degrees
    const Graph g2 = cone_minus_triangle();
    cell.type = make_type({1}, {4}, 4);
    CHECK(monomial_label(cell, g2) == Monomial({1, 0, 0, 3}));
}

TEST_CASE("faces take the union of their cofaces' types")
{
    for (const auto& arr : {figure_arrangement(), Arrangement::standard_generic(4)})
    {
        const CellComplex complex = enumerate_cells(arr);
        for (size_t i = 0; i < complex.cells().size(); ++i)
        {
            const Cell& cell = complex.cells()[i];
            if (cell.dim == arr.n() - 1)
                continue;
            std::uint32_t union_a = 0, union_b = 0;
            for (int coface : complex.cofaces_of(static_cast<int>(i)))
            {
                union_a |= complex.cells()[coface].type.a_mask;
                union_b |= complex.cells()[coface].type.b_mask;
            }
            CHECK(union_a == cell.type.a_mask);
            CHECK(union_b == cell.type.b_mask);
        }
    }
}

TEST_CASE("types along tropical segments stay between the endpoint types")
{
    const Arrangement arr = Arrangement::standard_generic(4);
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> numerator(-24, 24);
    auto random_point = [&]()
    {
        std::vector<Rat> x;
        for (int i = 0; i < arr.n() - 1; ++i)
            x.push_back(Rat(numerator(rng), 4));
        return x;
    };
    std::uniform_int_distribution<int> shift(0, 48);
    std::bernoulli_distribution coin;
    for (int trial = 0; trial < 1000; ++trial)
    {
        const auto x = random_point(), y = random_point();
        // segment points in homogeneous normalization: max(lambda, mu) = 0
        const Rat t(-shift(rng), 8);
        const auto z = coin(rng) ? tropical_segment_point(x, y, Rat(0), t)
                                 : tropical_segment_point(x, y, t, Rat(0));
        const TypePair cx = type_of_point(arr, x);
        const TypePair cy = type_of_point(arr, y);
        const TypePair cz = type_of_point(arr, z);
        CHECK((cz.a_mask & ~(cx.a_mask | cy.a_mask)) == 0);
        CHECK((cz.b_mask & ~(cx.b_mask | cy.b_mask)) == 0);
        CHECK((cx.a_mask & cy.a_mask & ~cz.a_mask) == 0);
        CHECK((cx.b_mask & cy.b_mask & ~cz.b_mask) == 0);
    }
}

TEST_CASE("labels of lower cells are lcms of their maximal cofaces")
{
    const Graph k5 = Graph::complete(5);
    const CellComplex complex = enumerate_cells(Arrangement::standard_generic(4));
    for (size_t i = 0; i < complex.cells().size(); ++i)
    {
        const Cell& cell = complex.cells()[i];
        if (cell.dim == complex.n() - 1)
            continue;
        Monomial join = Monomial::one(complex.n());
        for (int coface : complex.cofaces_of(static_cast<int>(i)))
            if (complex.cells()[coface].dim == complex.n() - 1)
                join = lcm(join, monomial_label(complex.cells()[coface], k5));
        CHECK(join == monomial_label(cell, k5));
    }
}

TEST_CASE("signed incidence composes to zero and the Euler count is one")
{
    for (int n = 2; n <= 5; ++n)
    {
        const CellComplex complex = enumerate_cells(Arrangement::standard_generic(n));
        CHECK(coboundary_squares_to_zero(complex));
        CHECK(euler_characteristic_codim(complex) == 1);
    }
    for (const Graph& g : {cone_minus_two_edges(), cone_minus_triangle()})
    {
        const Arrangement arr(4, std::vector<Rat>(3, 0), clique_cone_apex(g));
        const CellComplex complex = enumerate_cells(arr);
        CHECK(coboundary_squares_to_zero(complex));
        CHECK(euler_characteristic_codim(complex) == 1);
    }
}

TEST_CASE("dimension increases along the face relation")
{
    const CellComplex complex = enumerate_cells(Arrangement::standard_generic(4));
    for (const auto& [face, coface] : complex.face_relation())
        CHECK(complex.cells()[face].dim < complex.cells()[coface].dim);
}

TEST_CASE("minimality of the labeling")
{
    const Graph k4 = Graph::complete(4);
    CHECK(verify_minimality(enumerate_cells(figure_arrangement()), k4));

    // synthetic negative control: two incident cells forced to share a label
    const Graph star(3, {{0, 1}, {0, 2}});
    std::vector<Cell> cells(2);
    cells[0].type = make_type({1}, {1}, 2);
    cells[0].dim = 1;
    cells[0].witness = {Rat(5)};
    cells[1].type = make_type({1, 2}, {1}, 2);
    cells[1].dim = 0;
    cells[1].witness = {Rat(0)};
    const CellComplex synthetic(Arrangement::standard_generic(2), std::move(cells));
    CHECK_FALSE(verify_minimality(synthetic, star));
}

TEST_CASE("apexes for clique-cone graphs")
{
    CHECK(clique_cone_apex(cone_minus_two_edges()) == std::vector<Rat>{1, 1, 0});
    CHECK(clique_cone_apex(cone_minus_triangle()) == std::vector<Rat>{1, 1, 1});
    CHECK(clique_cone_apex(Graph::complete(5)) == std::vector<Rat>{1, 2, 3});
    CHECK(clique_cone_apex(Graph::complete(2)) == std::vector<Rat>{});

    // not a cone: vertex 1 misses the sink
    CHECK_THROWS_AS(clique_cone_apex(Graph(3, {{0, 2}, {1, 2}})), DomainError);
    // removed edges {1,2},{2,3} do not form disjoint cliques
    const Graph bad(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(clique_cone_apex(bad), DomainError);
}

TEST_CASE("tropical reading equals the homological oracle")
{
    for (int n = 2; n <= 3; ++n)
    {
        const Graph g = Graph::complete(n + 1);
        const CellComplex complex = enumerate_cells(Arrangement::standard_generic(n));
        CHECK(betti_from_complex(complex, g) == betti_table(skeleton_ideal(g, 1)));
        CHECK(verify_minimality(complex, g));
    }
    for (const Graph& g : {cone_minus_two_edges(), cone_minus_triangle()})
    {
        const Arrangement arr(4, std::vector<Rat>(3, 0), clique_cone_apex(g));
        const CellComplex complex = enumerate_cells(arr);
        CHECK(betti_from_complex(complex, g) == betti_table(skeleton_ideal(g, 1)));
        CHECK(verify_minimality(complex, g));
    }
}

TEST_CASE("maximal cells of a degenerate arrangement carry the minimal generators")
{
    const Graph g = cone_minus_triangle();
    const Arrangement arr(4, std::vector<Rat>(3, 0), clique_cone_apex(g));
    const CellComplex complex = enumerate_cells(arr);
    std::vector<Monomial> labels;
    for (int index : complex.maximal_cells())
        labels.push_back(monomial_label(complex.cells()[index], g));
    std::sort(labels.begin(), labels.end());
    CHECK(labels == skeleton_ideal(g, 1).generators());
    CHECK_FALSE(complex.is_generic());
}

TEST_CASE("enumeration guard")
{
    CHECK_THROWS_AS(enumerate_cells(Arrangement(12, std::vector<Rat>(11, 0),
                                                std::vector<Rat>(11, 1))),
                    ResourceError);
}

TEST_CASE("svg rendering")
{
    const std::string svg = arrangement_svg(figure_arrangement());
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK_THROWS_AS(arrangement_svg(Arrangement::standard_generic(4)), InputError);
}
