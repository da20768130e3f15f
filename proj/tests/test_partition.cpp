#include <doctest.h>

#include "sumcol/partition.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>

using namespace sumcol;

using P = IntegerPartition;
using Parts = std::vector<P>;

namespace {

Parts sorted(Parts v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// Every feasible (n, alpha, s, m) with 1 <= n <= max_n.
template <typename F> void for_each_params(std::size_t max_n, F f)
{
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t s = 1; s <= n; ++s)
                for (std::size_t m = 0; m <= n; ++m) {
                    const BoundParams p{n, a, s, m};
                    if (p.feasible())
                        f(p);
                }
}

} // namespace

TEST_CASE("construction")
{
    CHECK(P{4, 4, 3, 1, 0, 0}.parts() == std::vector<std::size_t>{4, 4, 3, 1});
    CHECK(P{4, 4, 3, 1}.n() == 12);
    CHECK(P{}.n() == 0);
    CHECK(P{3, 1}.part(3) == 0);
    CHECK_THROWS_AS((P{1, 2}), std::invalid_argument);
    CHECK(P::column(3) == P{1, 1, 1});
    CHECK(to_string(P{5, 4, 1, 1}) == "(5,4,1,1)");
}

TEST_CASE("cost examples")
{
    CHECK(cost(P{9}) == 9);
    CHECK(cost(P::column(9)) == 45);
    CHECK(cost(P{4, 4, 3, 1}) == 25);
    CHECK(cost(P{6, 2, 1}) == 13);
    CHECK(chi_cost(P{6, 2, 1}) == 3);
}

TEST_CASE("change examples")
{
    CHECK(change(P{4, 4, 3, 1}, 2, 4) == P{4, 3, 3, 2});
    CHECK(change(P{2}, 1, 2) == P{1, 1});
    CHECK_THROWS_AS(change(P{3, 3}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(change(P{3}, 2, 1), std::invalid_argument);
}

TEST_CASE("successor examples")
{
    CHECK(sorted(successors(P{4, 4, 3, 1})) == sorted({P{4, 3, 3, 2}, P{4, 4, 2, 2}}));
    CHECK(successors(P::column(6)).empty());
    CHECK(successors(P{2}) == Parts{P{1, 1}});
    const auto moves = successor_moves(P{4, 4, 3, 1});
    REQUIRE(moves.size() == 2);
    CHECK(moves[0].from == 2);
    CHECK(moves[0].to == 4);
}

TEST_CASE("admissibility examples")
{
    const BoundParams myciel3{11, 5, 4, 1};
    CHECK(is_admissible(P{5, 4, 1, 1}, myciel3));
    CHECK_FALSE(is_admissible(P{5, 5, 1}, myciel3));
    CHECK_FALSE(is_admissible(P{6, 3}, BoundParams{9, 6, 3, 1}));
    CHECK_FALSE(is_admissible(P{5, 4, 1}, myciel3));
}

TEST_CASE("predecessor examples")
{
    const BoundParams p{11, 5, 4, 1};
    CHECK(predecessors(P{4, 4, 2, 1}, p) == Parts{P{5, 3, 2, 1}});
    CHECK(predecessors(P{5, 4, 1, 1}, p).empty());
    CHECK_THROWS_AS(predecessors(P{5, 5, 1}, p), std::invalid_argument);

    // Inverting the successor relation finds a second parent, (5,4,1,1): its
    // square comes back to line 1 from line 3, which the line-above guard
    // blocks (line 2 holds 4 = alpha_bar - 1 and sits below m). The
    // target-line guard accepts it.
    Parts from_filter;
    for (const auto& b : enumerate_admissible(p)) {
        const auto succ = successors(b);
        if (std::find(succ.begin(), succ.end(), P{4, 4, 2, 1}) != succ.end())
            from_filter.push_back(b);
    }
    CHECK(sorted(from_filter) == sorted({P{5, 3, 2, 1}, P{5, 4, 1, 1}}));
    CHECK(sorted(predecessors(P{4, 4, 2, 1}, p, PredecessorGuard::target_line)) == sorted(from_filter));
}

TEST_CASE("property: predecessors are a subset of inverse successors")
{
    for_each_params(10, [&](const BoundParams& p) {
        const auto nodes = enumerate_admissible(p);
        std::map<P, std::set<P>> parents;
        for (const auto& b : nodes)
            for (const auto& a : successors(b))
                parents[a].insert(b);
        for (const auto& a : nodes)
            for (auto guard : {PredecessorGuard::line_above, PredecessorGuard::target_line})
                for (const auto& b : predecessors(a, p, guard)) {
                    CAPTURE(p.describe());
                    REQUIRE(parents[a].contains(b));
                }
    });
}

TEST_CASE("enumerate_admissible examples")
{
    CHECK(enumerate_admissible({3, 3, 1, 1}) == Parts{P{3}, P{2, 1}, P{1, 1, 1}});
    CHECK(enumerate_admissible({3, 3, 2, 1}) == Parts{P{2, 1}, P{1, 1, 1}});
    const auto nine = enumerate_admissible({9, 6, 3, 1});
    CHECK(std::count(nine.begin(), nine.end(), P{6, 2, 1}) == 1);
    CHECK(std::count(nine.begin(), nine.end(), P{6, 3}) == 0);
    CHECK_THROWS_AS(enumerate_admissible({41, 5, 1, 1}), OracleLimitExceeded);
}

TEST_CASE("for_each_partition visits p(n) partitions")
{
    const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (std::size_t n = 1; n <= 12; ++n) {
        std::size_t c = 0;
        for_each_partition(n, n, [&](const P&) { ++c; });
        CHECK(c == counts[n]);
    }
}

TEST_CASE("oracle examples")
{
    auto o = oracle_min({9, 6, 3, 1});
    REQUIRE(o);
    CHECK(o->partition == P{6, 2, 1});
    CHECK(o->cost == 13);

    o = oracle_min({11, 5, 4, 1});
    REQUIRE(o);
    CHECK(o->partition == P{5, 4, 1, 1});
    CHECK(o->cost == 20);

    o = oracle_min({4, 1, 4, 4});
    REQUIRE(o);
    CHECK(o->partition == P{1, 1, 1, 1});
    CHECK(o->cost == 10);

    CHECK_FALSE(oracle_min({4, 1, 4, 3}));
    CHECK_FALSE(oracle_min({4, 2, 5, 1}));
}

TEST_CASE("feasibility")
{
    CHECK(BoundParams{9, 6, 3, 1}.feasible());
    CHECK_FALSE(BoundParams{4, 1, 4, 3}.feasible());
    CHECK(BoundParams{4, 1, 4, 4}.feasible());
    CHECK_FALSE(BoundParams{4, 2, 5, 4}.feasible());
    CHECK(BoundParams{5, 2, 1, 0}.feasible());
}

TEST_CASE("lattice examples")
{
    const auto chain = lattice_dag({3, 3, 1, 1});
    REQUIRE(chain.nodes == Parts{P{3}, P{2, 1}, P{1, 1, 1}});
    REQUIRE(chain.arcs.size() == 2);
    CHECK(chain.arcs[0].from == 0);
    CHECK(chain.arcs[0].to == 1);
    CHECK(chain.arcs[1].from == 1);
    CHECK(chain.arcs[1].to == 2);
    // labels are the cost increases 3 -> 4 -> 6
    CHECK(chain.arcs[0].label == 1);
    CHECK(chain.arcs[1].label == 2);

    const auto nine = lattice_dag({9, 6, 3, 1});
    REQUIRE(nine.optimum);
    CHECK(nine.nodes[*nine.optimum] == P{6, 2, 1});
    CHECK(nine.costs[*nine.optimum] == 13);
    CHECK(nine.predecessor_free[*nine.optimum]);

    const auto big = lattice_dag({12, 4, 1, 2});
    const auto from = std::find(big.nodes.begin(), big.nodes.end(), P{4, 4, 3, 1}) - big.nodes.begin();
    const auto to = std::find(big.nodes.begin(), big.nodes.end(), P{4, 3, 3, 2}) - big.nodes.begin();
    const auto arc = std::find_if(big.arcs.begin(), big.arcs.end(), [&](const LatticeArc& x) {
        return x.from == static_cast<std::size_t>(from) && x.to == static_cast<std::size_t>(to);
    });
    REQUIRE(arc != big.arcs.end());
    CHECK(arc->label == 2);

    CHECK_THROWS_AS(lattice_dag({16, 4, 4, 1}), OracleLimitExceeded);
}

TEST_CASE("lattice rendering")
{
    CHECK(young_diagram(P{3, 1}) == "###\n#\n");
    const auto dag = lattice_dag({3, 3, 1, 1});
    const auto dot = to_dot(dag);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("p0 -> p1 [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("fillcolor=lightblue") != std::string::npos);
    const auto text = to_text(dag);
    CHECK(text.find("(3)  cost 3  no-predecessor  OPTIMUM") != std::string::npos);
}

TEST_CASE("property: cost delta and closure over all partitions of n <= 12")
{
    for (std::size_t n = 1; n <= 12; ++n)
        for_each_partition(n, n, [&](const P& a) {
            for (const auto& mv : successor_moves(a)) {
                REQUIRE(mv.to > mv.from);
                REQUIRE(cost(mv.result) == cost(a) + (mv.to - mv.from));
                REQUIRE(mv.result.n() == n);
            }
            // only the column is terminal
            REQUIRE(successors(a).empty() == (a == P::column(n)));
        });

    std::size_t checked = 0;
    for_each_params(12, [&](const BoundParams& p) {
        for (const auto& a : enumerate_admissible(p)) {
            for (const auto& b : successors(a))
                REQUIRE(is_admissible(b, p));
            for (auto guard : {PredecessorGuard::line_above, PredecessorGuard::target_line})
                for (const auto& mv : predecessor_moves(a, p, guard)) {
                    REQUIRE(mv.to < mv.from);
                    REQUIRE(cost(mv.result) + (mv.from - mv.to) == cost(a));
                    REQUIRE(is_admissible(mv.result, p));
                }
            ++checked;
        }
    });
    CHECK(checked > 0);
}

TEST_CASE("property: admissible partitions are connected (n <= 12)")
{
    for_each_params(12, [&](const BoundParams& p) {
        const auto nodes = enumerate_admissible(p);
        REQUIRE_FALSE(nodes.empty());
        std::map<P, std::size_t> index;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            index[nodes[k]] = k;
        std::vector<std::size_t> root(nodes.size());
        for (std::size_t k = 0; k < root.size(); ++k)
            root[k] = k;
        auto find = [&](std::size_t x) {
            while (root[x] != x)
                x = root[x] = root[root[x]];
            return x;
        };
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            for (const auto& b : successors(nodes[k]))
                if (auto it = index.find(b); it != index.end())
                    root[find(k)] = find(it->second);
            for (const auto& b : predecessors(nodes[k], p))
                root[find(k)] = find(index.at(b));
        }
        std::set<std::size_t> parts;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            parts.insert(find(k));
        CAPTURE(p.describe());
        REQUIRE(parts.size() == 1);
    });
}

TEST_CASE("property: the oracle optimum has no predecessor (n <= 12)")
{
    std::size_t grids = 0, extra_free = 0;
    std::string first_example;
    for_each_params(12, [&](const BoundParams& p) {
        const auto opt = oracle_min(p);
        REQUIRE(opt);
        CAPTURE(p.describe());
        REQUIRE(predecessors(opt->partition, p).empty());
        ++grids;
        for (const auto& a : enumerate_admissible(p))
            if (cost(a) > opt->cost && predecessors(a, p).empty()) {
                ++extra_free;
                if (first_example.empty())
                    first_example = to_string(a) + " under " + p.describe() + " (optimum "
                        + to_string(opt->partition) + ")";
            }
    });
    // The converse does not hold: report it rather than assert it.
    MESSAGE("predecessor-free but not optimal: " << extra_free << " partitions over " << grids
                                                 << " parameter sets; first: " << first_example);
    CHECK(grids > 0);
}

TEST_CASE("the column has no predecessor even when it is not optimal")
{
    const BoundParams p{3, 3, 1, 1};
    CHECK(predecessors(P{1, 1, 1}, p).empty());
    CHECK(oracle_min(p)->partition == P{3});
}

TEST_CASE("property: line-by-line addition is cost additive")
{
    for (std::size_t n1 = 0; n1 <= 8; ++n1)
        for (std::size_t n2 = 0; n2 <= 8; ++n2) {
            std::vector<P> left, right;
            if (n1 == 0)
                left.push_back(P{});
            else
                for_each_partition(n1, n1, [&](const P& a) { left.push_back(a); });
            if (n2 == 0)
                right.push_back(P{});
            else
                for_each_partition(n2, n2, [&](const P& b) { right.push_back(b); });
            for (const auto& a : left)
                for (const auto& b : right) {
                    const auto c = add_lines(a, b);
                    REQUIRE(c.n() == n1 + n2);
                    REQUIRE(cost(c) == cost(a) + cost(b));
                }
        }
}
