#include "sumcol/mis_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace sumcol {

std::size_t MisGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

Graph MisGraph::to_graph() const
{
    Graph g(size(), "mis-graph");
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = adj_[i].find_next(i); j < size(); j = adj_[i].find_next(j))
            g.add_edge(i, j);
    return g;
}

MisGraph build_mis_graph(const std::vector<std::vector<std::size_t>>& sets, std::size_t base_n)
{
    MisGraph mg;
    mg.base_n_ = base_n;
    mg.members_.reserve(sets.size());
    std::set<Bitset> seen;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty())
            throw std::invalid_argument("set " + std::to_string(i) + " is empty");
        Bitset b(base_n);
        for (auto v : sets[i]) {
            if (v >= base_n)
                throw std::invalid_argument("vertex out of range in set " + std::to_string(i));
            b.set(v);
        }
        if (!seen.insert(b).second)
            throw std::invalid_argument("set " + std::to_string(i) + " is a duplicate");
        mg.members_.push_back(std::move(b));
    }

    const std::size_t k = mg.members_.size();
    mg.adj_.assign(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (mg.members_[i].intersects(mg.members_[j])) {
                mg.adj_[i].set(j);
                mg.adj_[j].set(i);
            }
    return mg;
}

AlphaResult alpha_tilde(const MisGraph& mg, const Budget& budget)
{
    if (mg.size() == 0)
        throw std::invalid_argument("alpha_tilde needs a nonempty mis-graph");
    return max_independent_set(mg.to_graph(), budget);
}

std::size_t compute_m(std::size_t n, std::size_t alpha_bar, std::optional<std::size_t> num_is,
    std::optional<std::size_t> alpha_tilde)
{
    if (n < 1 || alpha_bar < 1)
        throw std::invalid_argument("compute_m needs n >= 1 and alpha_bar >= 1");
    std::size_t m = n / alpha_bar;
    if (num_is)
        m = std::min(m, *num_is);
    if (alpha_tilde)
        m = std::min(m, *alpha_tilde);
    return m;
}

} // namespace sumcol
