#include <doctest.h>

#include "sumcol/generators.hpp"
#include "sumcol/mis_graph.hpp"

#include <random>

using namespace sumcol;

namespace {

const Budget budget{Seconds(60), 100'000};

MisGraph mis_graph_of(const Graph& g)
{
    const auto a = max_independent_set(g, budget);
    const auto e = enumerate_maximum_independent_sets(g, a.value, budget);
    REQUIRE_FALSE(e.truncated);
    return build_mis_graph(e.sets, g.size());
}

} // namespace

TEST_CASE("build examples")
{
    const auto disjoint = build_mis_graph({{0, 1}, {2, 3}}, 4);
    CHECK(disjoint.size() == 2);
    CHECK(disjoint.edge_count() == 0);

    const auto chain = build_mis_graph({{0, 1}, {1, 2}, {2, 3}}, 4);
    CHECK(chain.edge_count() == 2);
    CHECK(chain.adjacent(0, 1));
    CHECK(chain.adjacent(1, 2));
    CHECK_FALSE(chain.adjacent(0, 2));
    CHECK_FALSE(chain.adjacent(1, 1));
}

TEST_CASE("build rejects bad input")
{
    CHECK_THROWS_AS(build_mis_graph({{0, 1}, {1, 0}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_mis_graph({{0}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_mis_graph({{0, 3}}, 3), std::invalid_argument);
}

TEST_CASE("single-vertex mis-graph")
{
    const auto mg = build_mis_graph({{0, 2}}, 3);
    const auto at = alpha_tilde(mg, budget);
    CHECK(at.value == 1);
    CHECK(at.exact);
    CHECK_THROWS_AS(alpha_tilde(MisGraph{}, budget), std::invalid_argument);
}

TEST_CASE("queen6_6: four disjoint maximum sets")
{
    const auto mg = mis_graph_of(gen::queen(6, 6));
    CHECK(mg.size() == 4);
    CHECK(mg.edge_count() == 0);
    CHECK(alpha_tilde(mg, budget).value == 4);
}

TEST_CASE("queen8_8 and queen9_9")
{
    const auto q8 = mis_graph_of(gen::queen(8, 8));
    CHECK(q8.size() == 92);
    CHECK(alpha_tilde(q8, budget).value == 6);

    const auto q9 = mis_graph_of(gen::queen(9, 9));
    CHECK(q9.size() == 352);
    CHECK(alpha_tilde(q9, budget).value == 7);
}

TEST_CASE("compute_m examples")
{
    CHECK(compute_m(25, 5, 10, 5) == 5);
    CHECK(compute_m(11, 5, 2, 1) == 1);
    CHECK(compute_m(10, 3, std::nullopt, std::nullopt) == 3);
    CHECK(compute_m(10, 3, 2, std::nullopt) == 2);
    CHECK(compute_m(10, 3, std::nullopt, 0) == 0);
    CHECK_THROWS_AS(compute_m(0, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("property: edge rule, bounds on m and disjoint witnesses")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 4 + rng() % 16;
        const auto g = gen::random_graph(n, std::uniform_real_distribution<double>(0.1, 0.8)(rng), rng());
        const auto a = max_independent_set(g, budget);
        const auto e = enumerate_maximum_independent_sets(g, a.value, budget);
        const auto mg = build_mis_graph(e.sets, n);

        for (std::size_t i = 0; i < mg.size(); ++i)
            for (std::size_t j = 0; j < mg.size(); ++j) {
                bool shared = false;
                for (auto v : e.sets[i])
                    for (auto w : e.sets[j])
                        shared |= v == w;
                REQUIRE(mg.adjacent(i, j) == (i != j && shared));
            }

        const auto at = alpha_tilde(mg, budget);
        REQUIRE(at.exact);
        REQUIRE(at.value <= e.count);
        const auto m = compute_m(n, a.value, e.count, at.value);
        REQUIRE(m <= n / a.value);

        Bitset used(n);
        for (auto k : at.witness) {
            REQUIRE_FALSE(used.intersects(mg.member(k)));
            used |= mg.member(k);
        }
        REQUIRE(used.count() == at.value * a.value);
    }
}
