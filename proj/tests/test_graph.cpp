#include <doctest.h>

#include "sumcol/generators.hpp"
#include "sumcol/graph.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace sumcol;

namespace {

std::size_t parse_error_line(std::string_view text)
{
    try {
        parse_dimacs(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("parse a minimal path")
{
    const auto g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("duplicate and reversed edges collapse")
{
    const auto g = parse_dimacs("c comment\np edge 3 5\ne 1 2\ne 2 1\ne 1 2\ne 3 2\ne 2 3\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("'p col' header and CRLF line ends are accepted")
{
    const auto g = parse_dimacs("p col 2 1\r\ne 1 2\r\n");
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse errors carry the line number")
{
    CHECK(parse_error_line("p edge 2 1\ne 1 1") == 2);
    CHECK(parse_error_line("c x\ne 1 2\np edge 2 1") == 2);
    CHECK(parse_error_line("p edge 3 1\ne 1 4") == 2);
    CHECK(parse_error_line("p edge 3 1\ne 0 1") == 2);
    CHECK(parse_error_line("p edge 3 1\np edge 3 1") == 2);
    CHECK(parse_error_line("p edge x 1") == 1);
    CHECK(parse_error_line("p edge 3 1\nq 1 2") == 2);
    CHECK(parse_error_line("p edge 3 1\ne 1") == 2);
    CHECK(parse_error_line("c only a comment\n") == 1);
    CHECK_THROWS_WITH_AS(parse_dimacs("p edge 2 1\ne 1 1"), "line 2: self-loop on vertex 1", ParseError);
}

TEST_CASE("myciel3 size and density")
{
    const auto g = gen::mycielski(3);
    CHECK(g.size() == 11);
    CHECK(g.edge_count() == 20);
    CHECK(std::round(density(g) * 100) / 100 == doctest::Approx(0.36));
}

TEST_CASE("density")
{
    CHECK(density(gen::complete(3)) == doctest::Approx(1.0));
    CHECK(density(gen::empty(4)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(density(gen::empty(1)), std::domain_error);
}

TEST_CASE("complement examples")
{
    const auto k3c = complement(gen::complete(3));
    CHECK(k3c.edge_count() == 0);
    CHECK(k3c.size() == 3);

    const auto c5 = gen::cycle(5);
    const auto c5c = complement(c5);
    CHECK(c5c.edge_count() == 5);
    for (std::size_t u = 0; u < 5; ++u) {
        CHECK(degree_in(c5c, u + 1) == 2);
        for (std::size_t v = 0; v < 5; ++v)
            CHECK(c5c.adjacent(u, v) == (u != v && !c5.adjacent(u, v)));
    }
}

TEST_CASE("degree_in uses 1-based labels")
{
    const auto p = gen::path(3);
    CHECK(degree_in(p, 2) == 2);
    CHECK(degree_in(p, 1) == 1);
    for (std::size_t v = 1; v <= 3; ++v)
        CHECK(degree_in(gen::complete(3), v) == 2);
    CHECK_THROWS_AS(degree_in(p, 0), std::out_of_range);
    CHECK_THROWS_AS(degree_in(p, 4), std::out_of_range);
}

TEST_CASE("add_edge rejects self-loops and bad indices")
{
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

TEST_CASE("property: write/parse round trip, complement involution, handshake")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 50;
        const double p = std::uniform_real_distribution<double>(0, 1)(rng);
        const auto g = gen::random_graph(n, p, rng());

        const auto back = parse_dimacs(to_dimacs(g));
        REQUIRE(back == g);
        REQUIRE(back.edge_count() == g.edge_count());

        REQUIRE(complement(complement(g)) == g);
        REQUIRE(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);

        std::size_t degrees = 0;
        for (std::size_t v = 0; v < n; ++v)
            degrees += g.degree(v);
        REQUIRE(degrees == 2 * g.edge_count());
    }
}

TEST_CASE("round trip ignores comments and edge order")
{
    const auto a = parse_dimacs("c hello\np edge 4 3\ne 3 4\ne 2 1\nc mid\ne 1 3\n");
    const auto b = parse_dimacs("p edge 4 3\ne 1 2\ne 1 3\ne 4 3\n");
    CHECK(a == b);
    std::ostringstream out;
    write_dimacs(out, a);
    CHECK(out.str() == "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n");
}

TEST_CASE("generated benchmarks have the standard sizes")
{
    struct Row {
        const char* name;
        std::size_t n, edges;
    };
    for (const Row& r : {Row{"myciel4", 23, 71}, Row{"myciel5", 47, 236}, Row{"myciel6", 95, 755},
             Row{"myciel7", 191, 2360}, Row{"queen5_5", 25, 160}, Row{"queen8_12", 96, 1368},
             Row{"queen12.12", 144, 2596}, Row{"2-Insertions_3", 37, 72}, Row{"3-Insertions_3", 56, 110}}) {
        CAPTURE(r.name);
        const auto g = gen::by_name(r.name);
        REQUIRE(g);
        CHECK(g->size() == r.n);
        CHECK(g->edge_count() == r.edges);
    }
    CHECK_FALSE(gen::by_name("DSJC125.1"));
}
