#include <catch2/catch_amalgamated.hpp>

#include "parkideal/betti.hpp"
#include "parkideal/errors.hpp"
#include "parkideal/json_io.hpp"
#include "parkideal/qpolynomial.hpp"
#include "parkideal/standard_monomials.hpp"

using namespace parkideal;

namespace {

long long fine_entry(const BettiTable& table, int i, std::vector<int> degree)
{
    auto it = table.fine().find({i, degree});
    return it == table.fine().end() ? 0 : it->second;
}

// 1 + sum_{i >= 1} (-1)^i sum_b beta_{i,b} q^{|b|}
QPolynomial numerator_from_betti(const BettiTable& table)
{
    QPolynomial result = QPolynomial::term(1, 0);
    for (const auto& [key, mult] : table.coarse())
    {
        const Int sign = key.first % 2 == 0 ? 1 : -1;
        result = result + QPolynomial::term(sign * mult, key.second);
    }
    return result;
}

}  // namespace

TEST_CASE("principal and Koszul baselines")
{
    const BettiTable principal = betti_table(MonomialIdeal(1, {Monomial({2})}));
    CHECK(principal.fine().size() == 1);
    CHECK(fine_entry(principal, 1, {2}) == 1);

    const BettiTable koszul = betti_table(MonomialIdeal(2, {Monomial({1, 0}), Monomial({0, 1})}));
    CHECK(fine_entry(koszul, 1, {1, 0}) == 1);
    CHECK(fine_entry(koszul, 1, {0, 1}) == 1);
    CHECK(fine_entry(koszul, 2, {1, 1}) == 1);
    CHECK(koszul.totals() == std::vector<long long>{2, 1});
}

TEST_CASE("one-skeleton of K4, finely graded")
{
    const BettiTable table = betti_table(skeleton_ideal(Graph::complete(4), 1));
    CHECK(table.totals() == std::vector<long long>{6, 8, 3});

    const auto coarse = table.coarse();
    CHECK(coarse.at({1, 3}) == 3);
    CHECK(coarse.at({1, 4}) == 3);
    CHECK(coarse.at({2, 5}) == 6);
    CHECK(coarse.at({2, 6}) == 2);
    CHECK(coarse.at({3, 7}) == 3);
    CHECK(coarse.size() == 5);

    // the two degree-6 syzygies sit at the single fine degree (2,2,2)
    CHECK(fine_entry(table, 2, {2, 2, 2}) == 2);
    // and the top strand is the three permutations of (3,2,2)
    CHECK(fine_entry(table, 3, {2, 3, 2}) == 1);
    CHECK(fine_entry(table, 3, {3, 2, 2}) == 1);
    CHECK(fine_entry(table, 3, {2, 2, 3}) == 1);
}

TEST_CASE("totals match the closed formula")
{
    CHECK(total_betti_formula(3, 1) == 6);
    CHECK(total_betti_formula(3, 2) == 8);
    CHECK(total_betti_formula(3, 3) == 3);
    CHECK(total_betti_formula(4, 1) == 10);
    CHECK(total_betti_formula(4, 2) == 20);
    CHECK(total_betti_formula(4, 3) == 15);
    CHECK(total_betti_formula(4, 4) == 4);
    CHECK_THROWS_AS(total_betti_formula(3, 0), InputError);

    for (int n = 2; n <= 4; ++n)
    {
        const auto totals = betti_table(skeleton_ideal(Graph::complete(n + 1), 1)).totals();
        REQUIRE(static_cast<int>(totals.size()) == n);
        for (int i = 1; i <= n; ++i)
            CHECK(totals[i - 1] == total_betti_formula(n, i));
    }
}

TEST_CASE("first Betti number equals the edge-degree formula")
{
    const Graph h(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(first_betti_graph_formula(h) == 9);
    CHECK(first_betti_graph_formula(Graph::complete(5)) == 10);

    // star with the sink at the center: only the singleton generators remain
    const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(first_betti_graph_formula(star) == 4);
    CHECK(skeleton_ideal(star, 1).generators().size() == 4);

    CHECK_THROWS_AS(first_betti_graph_formula(Graph(3, {{1, 2}})), InputError);
}

TEST_CASE("alternating fine sums agree with the standard-monomial series")
{
    for (const MonomialIdeal& ideal :
         {skeleton_ideal(Graph::complete(4), 1), skeleton_ideal(Graph::complete(5), 1),
          skeleton_ideal(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), 1),
          skeleton_ideal(Graph::complete(4), 2)})
    {
        const int n = ideal.variable_count();
        QPolynomial one_minus_q({Int(1), Int(-1)});
        QPolynomial product = degree_generating_function(ideal);
        for (int i = 0; i < n; ++i)
            product = product * one_minus_q;
        CHECK(product == numerator_from_betti(betti_table(ideal)));
    }
}

TEST_CASE("homology ranks are field independent on these ideals")
{
    for (const MonomialIdeal& ideal :
         {skeleton_ideal(Graph::complete(4), 1), skeleton_ideal(Graph::complete(4), 2),
          skeleton_ideal(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}}), 1)})
        CHECK(betti_table(ideal) == betti_table_mod_p(ideal, 32003));
}

TEST_CASE("lcm closure guard")
{
    const auto lattice = lcm_lattice(skeleton_ideal(Graph::complete(4), 1));
    CHECK(lattice.size() >= 6);
    CHECK_THROWS_AS(lcm_lattice(skeleton_ideal(Graph::complete(5), 1), 5), ResourceError);
}

TEST_CASE("betti JSON shape")
{
    const std::string json = betti_to_json(betti_table(MonomialIdeal(1, {Monomial({2})})), -1);
    CHECK(json == R"({"fine":[{"i":1,"degree":[2],"mult":1}],"coarse":[{"i":1,"totaldeg":2,"mult":1}]})");
}
