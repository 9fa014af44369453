#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "parkideal/chipfire.hpp"
#include "parkideal/errors.hpp"
#include "parkideal/standard_monomials.hpp"

using namespace parkideal;

TEST_CASE("firing a set")
{
    const Graph k4 = Graph::complete(4);
    CHECK(fire_set(k4, {3, 0, 0}, std::vector<int>{1}) == Configuration{0, 1, 1});
    CHECK(fire_set(k4, {2, 2, 0}, std::vector<int>{1, 2}) == Configuration{0, 0, 2});
    CHECK_THROWS_WITH(fire_set(k4, {2, 0, 0}, std::vector<int>{1}),
                      Catch::Matchers::ContainsSubstring("vertex 1"));
    CHECK_THROWS_AS(fire_set(k4, {2, 0}, std::vector<int>{1}), InputError);
    CHECK_THROWS_AS(fire_set(k4, {-1, 0, 0}, std::vector<int>{1}), InputError);
}

TEST_CASE("stability")
{
    const Graph k4 = Graph::complete(4);
    CHECK(is_stable(k4, {0, 0, 0}, FiringModel::singletons()));
    CHECK(is_stable(k4, {0, 0, 0}, FiringModel::cluster()));
    CHECK(is_stable(k4, {1, 0, 2}, FiringModel::cluster()));
    CHECK_FALSE(is_stable(k4, {1, 1, 1}, FiringModel::cluster()));
    CHECK(is_stable(k4, {1, 1, 1}, FiringModel::singletons()));
    // restricting the family can leave more configurations stable
    const FiringModel pairs_only = FiringModel::explicit_family({{1, 2}}, 3);
    CHECK(is_stable(k4, {3, 0, 3}, pairs_only));
}

TEST_CASE("singleton stabilization lands in the degree box")
{
    const Graph k4 = Graph::complete(4);
    const Configuration stable = stabilize(k4, {3, 3, 3}, FiringModel::singletons());
    CHECK(is_stable(k4, stable, FiringModel::singletons()));
    for (int i = 1; i <= 3; ++i)
        CHECK(stable[i - 1] <= k4.degree(i) - 1);

    CHECK_THROWS_AS(stabilize(Graph(3, {{1, 2}}), {0, 0}, FiringModel::cluster()), DomainError);
}

TEST_CASE("cluster-stable is exactly parking")
{
    for (const Graph& g : {Graph::complete(4), Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                           Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {1, 4}})})
    {
        const int n = g.non_sink_count();
        std::vector<int> b(n, 0);
        while (true)
        {
            Configuration c(b.begin(), b.end());
            CHECK(is_stable(g, c, FiringModel::cluster()) == is_g_parking(g, b));
            int pos = n - 1;
            while (pos >= 0 && b[pos] + 1 >= g.degree(pos + 1))
            {
                b[pos] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++b[pos];
        }
    }
}

TEST_CASE("stabilization is confluent under random policies")
{
    const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> chips(0, 6);
    for (int trial = 0; trial < 60; ++trial)
    {
        Configuration c;
        for (int i = 0; i < g.non_sink_count(); ++i)
            c.push_back(chips(rng));
        for (const FiringModel& model : {FiringModel::singletons(), FiringModel::cluster()})
        {
            const Configuration reference = stabilize(g, c, model);
            CHECK(stabilize_random(g, c, model, 1000 + trial) == reference);
            CHECK(stabilize_random(g, c, model, 2000 + trial) == reference);
        }
    }
}

TEST_CASE("trace records each firing")
{
    const Graph k4 = Graph::complete(4);
    const auto steps = stabilize_trace(k4, {3, 0, 0}, FiringModel::singletons());
    REQUIRE(!steps.empty());
    CHECK(steps.front().fired == std::vector<int>{1});
    CHECK(steps.front().result == Configuration{0, 1, 1});
    CHECK(is_stable(k4, steps.back().result, FiringModel::singletons()));
}
