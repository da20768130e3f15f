#include "sumcol/stable_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumcol {

void Budget::validate() const
{
    if (!(time_limit.count() > 0.0))
        throw std::invalid_argument("time limit must be positive");
    if (count_cap == 0)
        throw std::invalid_argument("count cap must be positive");
}

std::string_view to_string(AlphaMethod m)
{
    switch (m) {
    case AlphaMethod::exact_bnb:
        return "exact-bnb";
    case AlphaMethod::degree_rule:
        return "degree-rule";
    case AlphaMethod::greedy_coloring:
        return "greedy-coloring";
    }
    return "?";
}

AlphaMethod alpha_method_from_string(std::string_view s)
{
    for (auto m : {AlphaMethod::exact_bnb, AlphaMethod::degree_rule, AlphaMethod::greedy_coloring})
        if (to_string(m) == s)
            return m;
    throw std::invalid_argument("unknown alpha method '" + std::string(s) + "'");
}

namespace {

    std::vector<std::size_t> complement_degrees(const Graph& g)
    {
        std::vector<std::size_t> d(g.size());
        for (std::size_t v = 0; v < g.size(); ++v)
            d[v] = g.size() - 1 - g.degree(v);
        return d;
    }

} // namespace

std::size_t degree_rule_alpha_bar(const Graph& g, DegreeRule rule)
{
    if (g.size() == 0)
        throw std::invalid_argument("degree rule needs a nonempty graph");
    auto d = complement_degrees(g);
    std::sort(d.begin(), d.end(), std::greater<>());
    // d[k-1] is the k-th largest degree: k vertices have degree >= d[k-1]
    const std::size_t slack = rule == DegreeRule::sound ? 1 : 0;
    std::size_t best = 0;
    for (std::size_t k = 1; k <= d.size(); ++k)
        if (d[k - 1] + slack >= k)
            best = k;
    return std::max<std::size_t>(best, 1);
}

std::size_t greedy_coloring_alpha_bar(const Graph& g)
{
    if (g.size() == 0)
        throw std::invalid_argument("greedy colouring needs a nonempty graph");
    const std::size_t n = g.size();
    const auto d = complement_degrees(g);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });

    // colour 0 = uncoloured; complement adjacency is "not adjacent in g"
    std::vector<std::size_t> colour(n, 0);
    std::size_t used = 0;
    std::vector<char> taken;
    for (auto v : order) {
        taken.assign(used + 2, 0);
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && colour[u] && !g.adjacent(u, v))
                taken[colour[u]] = 1;
        std::size_t c = 1;
        while (taken[c])
            ++c;
        colour[v] = c;
        used = std::max(used, c);
    }
    return used;
}

AlphaResult max_independent_set(const Graph& g, const Budget& budget)
{
    budget.validate();
    if (g.size() == 0)
        throw std::invalid_argument("max_independent_set needs a nonempty graph");
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(budget.time_limit);

    CliqueSearch search(complement(g));
    auto r = search.maximum(deadline);

    AlphaResult out;
    if (r.completed) {
        out.value = r.best_size;
        out.exact = true;
        out.method = AlphaMethod::exact_bnb;
        out.witness = std::move(r.best);
    } else {
        const auto by_degree = degree_rule_alpha_bar(g, DegreeRule::sound);
        const auto by_colour = greedy_coloring_alpha_bar(g);
        out.exact = false;
        out.value = std::min(by_degree, by_colour);
        out.method = by_degree <= by_colour ? AlphaMethod::degree_rule : AlphaMethod::greedy_coloring;
    }
    out.elapsed = Clock::now() - start;
    return out;
}

EnumerationResult enumerate_maximum_independent_sets(const Graph& g, std::size_t target,
    const Budget& budget)
{
    budget.validate();
    if (target < 1 || target > g.size())
        throw std::invalid_argument("target size must lie in 1..n");
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(budget.time_limit);

    CliqueSearch search(complement(g));
    auto r = search.enumerate(target, budget.count_cap, deadline);

    EnumerationResult out;
    out.target_size = target;
    out.sets = std::move(r.all);
    out.count = r.count;
    out.truncated = r.cap_hit || !r.completed;
    out.count_exact = r.completed;
    out.elapsed = Clock::now() - start;
    return out;
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

} // namespace sumcol
