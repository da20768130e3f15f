#include "sumcol/generators.hpp"

#include <charconv>
#include <cstdlib>
#include <random>
#include <string>

namespace sumcol::gen {

Graph complete(std::size_t n)
{
    Graph g(n, "K" + std::to_string(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph empty(std::size_t n) { return Graph(n, "E" + std::to_string(n)); }

Graph path(std::size_t n)
{
    Graph g(n, "P" + std::to_string(n));
    for (std::size_t v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    return g;
}

Graph cycle(std::size_t n)
{
    Graph g = path(n);
    g.set_name("C" + std::to_string(n));
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n, "G(" + std::to_string(n) + ")");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

Graph cone(const Graph& g, std::size_t levels)
{
    const std::size_t n = g.size();
    Graph out(n * (levels + 1) + 1);
    const auto edges = g.edges();
    for (auto [u, v] : edges)
        out.add_edge(u, v);
    for (std::size_t t = 1; t <= levels; ++t) {
        const std::size_t cur = t * n, prev = (t - 1) * n;
        for (auto [u, v] : edges) {
            out.add_edge(cur + u, prev + v);
            out.add_edge(cur + v, prev + u);
        }
    }
    const std::size_t apex = n * (levels + 1);
    for (std::size_t v = 0; v < n; ++v)
        out.add_edge(apex, levels * n + v);
    return out;
}

Graph mycielski(unsigned k)
{
    Graph g = complete(2);
    for (unsigned i = 1; i < k; ++i)
        g = cone(g, 1);
    g.set_name("myciel" + std::to_string(k));
    return g;
}

Graph queen(unsigned rows, unsigned cols)
{
    Graph g(std::size_t{rows} * cols, "queen" + std::to_string(rows) + "_" + std::to_string(cols));
    auto id = [cols](unsigned r, unsigned c) { return std::size_t{r} * cols + c; };
    for (unsigned r1 = 0; r1 < rows; ++r1)
        for (unsigned c1 = 0; c1 < cols; ++c1)
            for (unsigned r2 = 0; r2 < rows; ++r2)
                for (unsigned c2 = 0; c2 < cols; ++c2) {
                    const auto a = id(r1, c1), b = id(r2, c2);
                    if (a >= b)
                        continue;
                    const int dr = static_cast<int>(r1) - static_cast<int>(r2);
                    const int dc = static_cast<int>(c1) - static_cast<int>(c2);
                    if (dr == 0 || dc == 0 || std::abs(dr) == std::abs(dc))
                        g.add_edge(a, b);
                }
    return g;
}

Graph insertions(unsigned k, unsigned l)
{
    Graph g = complete(2);
    for (unsigned i = 1; i < l; ++i)
        g = cone(g, k + 1);
    g.set_name(std::to_string(k) + "-Insertions_" + std::to_string(l));
    return g;
}

namespace {

    std::optional<unsigned> to_uint(std::string_view s)
    {
        unsigned v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
            return std::nullopt;
        return v;
    }

} // namespace

std::optional<Graph> by_name(std::string_view name)
{
    std::optional<Graph> out;
    if (name.starts_with("myciel")) {
        if (auto k = to_uint(name.substr(6)); k && *k >= 2 && *k <= 12)
            out = mycielski(*k);
    } else if (name.starts_with("queen")) {
        auto rest = name.substr(5);
        auto sep = rest.find_first_of("_.");
        if (sep != std::string_view::npos) {
            auto r = to_uint(rest.substr(0, sep));
            auto c = to_uint(rest.substr(sep + 1));
            if (r && c && *r >= 1 && *c >= 1)
                out = queen(*r, *c);
        }
    } else if (auto pos = name.find("-Insertions_"); pos != std::string_view::npos) {
        auto k = to_uint(name.substr(0, pos));
        auto l = to_uint(name.substr(pos + 12));
        if (k && l && *l >= 1 && *l <= 8)
            out = insertions(*k, *l);
    }
    if (out)
        out->set_name(std::string(name));
    return out;
}

} // namespace sumcol::gen
