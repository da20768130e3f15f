#include "sumcol/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sumcol {

IntegerPartition::IntegerPartition(std::vector<std::size_t> parts)
    : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t k = 1; k < parts_.size(); ++k)
        if (parts_[k] > parts_[k - 1])
            throw std::invalid_argument("parts are not non-increasing: " + to_string(*this));
    for (auto x : parts_) {
        if (x == 0)
            throw std::invalid_argument("zero part before a nonzero part");
        n_ += x;
    }
}

IntegerPartition IntegerPartition::column(std::size_t n)
{
    return IntegerPartition(std::vector<std::size_t>(n, 1));
}

std::string to_string(const IntegerPartition& a)
{
    std::string s = "(";
    for (std::size_t k = 0; k < a.parts().size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(a.parts()[k]);
    }
    return s + ")";
}

std::uint64_t cost(const IntegerPartition& a)
{
    std::uint64_t c = 0;
    for (std::size_t i = 1; i <= a.lines(); ++i)
        c += static_cast<std::uint64_t>(i) * a.part(i);
    return c;
}

IntegerPartition add_lines(const IntegerPartition& a, const IntegerPartition& b)
{
    std::vector<std::size_t> out(std::max(a.lines(), b.lines()));
    for (std::size_t i = 1; i <= out.size(); ++i)
        out[i - 1] = a.part(i) + b.part(i);
    return IntegerPartition(std::move(out));
}

IntegerPartition change(const IntegerPartition& a, std::size_t i, std::size_t j)
{
    if (i < 1 || j < 1)
        throw std::invalid_argument("lines are 1-based");
    if (a.part(i) == 0)
        throw std::invalid_argument("line " + std::to_string(i) + " of " + to_string(a) + " is empty");
    std::vector<std::size_t> b(std::max({a.lines(), i, j}), 0);
    for (std::size_t k = 1; k <= a.lines(); ++k)
        b[k - 1] = a.part(k);
    b[i - 1] -= 1;
    b[j - 1] += 1;
    for (std::size_t k = 1; k < b.size(); ++k)
        if (b[k] > b[k - 1])
            throw std::invalid_argument(to_string(a) + " (+) (" + std::to_string(i) + "," + std::to_string(j)
                + ") is not a partition");
    return IntegerPartition(std::move(b));
}

bool BoundParams::feasible() const
{
    if (n < 1 || alpha_bar < 1 || s_lower < 1 || s_lower > n)
        return false;
    // m*a + (n-m)(a-1) = n(a-1) + m
    return n * (alpha_bar - 1) + m >= n;
}

std::string BoundParams::describe() const
{
    std::ostringstream s;
    s << "(n=" << n << ", alpha=" << alpha_bar << ", s=" << s_lower << ", m=" << m << ")";
    return s.str();
}

bool is_admissible(const IntegerPartition& a, const BoundParams& p)
{
    if (a.n() != p.n)
        return false;
    std::size_t full = 0;
    for (auto x : a.parts()) {
        if (x > p.alpha_bar)
            return false;
        if (x == p.alpha_bar)
            ++full;
    }
    return full <= p.m && a.part(p.s_lower) >= 1;
}

std::vector<Move> successor_moves(const IntegerPartition& a)
{
    std::vector<Move> out;
    for (std::size_t i = 1; i + 1 <= a.n(); ++i) {
        const std::size_t ai = a.part(i);
        if (ai != 1 && a.part(i + 1) < ai) {
            std::size_t j = i + 1;
            while (a.part(j) + 1 >= ai)
                ++j;
            out.push_back({i, j, change(a, i, j)});
        }
    }
    return out;
}

std::vector<IntegerPartition> successors(const IntegerPartition& a)
{
    std::vector<IntegerPartition> out;
    for (auto& mv : successor_moves(a))
        out.push_back(std::move(mv.result));
    return out;
}

std::vector<Move> predecessor_moves(const IntegerPartition& a, const BoundParams& p, PredecessorGuard guard)
{
    if (!is_admissible(a, p))
        throw std::invalid_argument(to_string(a) + " is not admissible under " + p.describe());
    // signed so that alpha_bar - 1 - ... never wraps
    const long long top = static_cast<long long>(p.alpha_bar);
    auto headroom = [&](std::size_t line, std::size_t value) {
        const long long cap = line <= p.m ? top : top - 1;
        return static_cast<long long>(value) < cap;
    };

    std::vector<Move> out;
    for (std::size_t i = 2; i + 1 <= a.n(); ++i) {
        const std::size_t ai = a.part(i);
        const bool occupancy = i <= p.s_lower ? ai > 1 : ai > 0;
        if (!occupancy || !(a.part(i + 1) < ai))
            continue;
        std::size_t j = i - 1;
        while (j != 1 && a.part(j) >= a.part(j - 1))
            --j;
        const bool room = guard == PredecessorGuard::line_above ? headroom(i - 1, a.part(i - 1))
                                                                : headroom(j, a.part(j));
        if (room)
            out.push_back({i, j, change(a, i, j)});
    }
    return out;
}

std::vector<IntegerPartition> predecessors(const IntegerPartition& a, const BoundParams& p, PredecessorGuard guard)
{
    std::vector<IntegerPartition> out;
    for (auto& mv : predecessor_moves(a, p, guard))
        out.push_back(std::move(mv.result));
    return out;
}

namespace {

    void partitions_rec(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& prefix,
        const std::function<void(const IntegerPartition&)>& f)
    {
        if (rest == 0) {
            f(IntegerPartition(prefix));
            return;
        }
        for (std::size_t x = std::min(rest, max_part); x >= 1; --x) {
            prefix.push_back(x);
            partitions_rec(rest - x, x, prefix, f);
            prefix.pop_back();
        }
    }

} // namespace

void for_each_partition(std::size_t n, std::size_t max_part, const std::function<void(const IntegerPartition&)>& f,
    std::size_t limit)
{
    if (n > limit)
        throw OracleLimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration limit "
            + std::to_string(limit));
    std::vector<std::size_t> prefix;
    partitions_rec(n, max_part, prefix, f);
}

std::vector<IntegerPartition> enumerate_admissible(const BoundParams& p, std::size_t limit)
{
    std::vector<IntegerPartition> out;
    for_each_partition(
        p.n, p.alpha_bar,
        [&](const IntegerPartition& a) {
            if (is_admissible(a, p))
                out.push_back(a);
        },
        limit);
    return out;
}

std::optional<OracleOptimum> oracle_min(const BoundParams& p, std::size_t limit)
{
    std::optional<OracleOptimum> best;
    for_each_partition(
        p.n, p.alpha_bar,
        [&](const IntegerPartition& a) {
            if (!is_admissible(a, p))
                return;
            const auto c = cost(a);
            // lexicographically decreasing order: first minimum wins ties
            if (!best || c < best->cost)
                best = OracleOptimum{a, c};
        },
        limit);
    return best;
}

LatticeDag lattice_dag(const BoundParams& p, std::size_t limit)
{
    LatticeDag dag;
    dag.params = p;
    dag.nodes = enumerate_admissible(p, limit);
    std::map<IntegerPartition, std::size_t> index;
    for (std::size_t k = 0; k < dag.nodes.size(); ++k) {
        index.emplace(dag.nodes[k], k);
        dag.costs.push_back(cost(dag.nodes[k]));
        dag.predecessor_free.push_back(predecessors(dag.nodes[k], p).empty());
    }
    for (std::size_t k = 0; k < dag.nodes.size(); ++k)
        for (const auto& mv : successor_moves(dag.nodes[k]))
            if (auto it = index.find(mv.result); it != index.end())
                dag.arcs.push_back({k, it->second, mv.to - mv.from});
    if (auto opt = oracle_min(p, limit))
        dag.optimum = index.at(opt->partition);
    return dag;
}

std::string young_diagram(const IntegerPartition& a)
{
    std::string s;
    for (auto x : a.parts()) {
        s.append(x, '#');
        s += '\n';
    }
    return s;
}

std::string to_dot(const LatticeDag& dag)
{
    std::ostringstream s;
    s << "digraph lattice {\n";
    s << "  label=\"admissible partitions " << dag.params.describe() << "\";\n";
    s << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t k = 0; k < dag.nodes.size(); ++k) {
        s << "  p" << k << " [label=\"" << to_string(dag.nodes[k]) << "\\ncost " << dag.costs[k] << "\"";
        if (dag.predecessor_free[k])
            s << ", peripheries=2";
        if (dag.optimum && *dag.optimum == k)
            s << ", style=filled, fillcolor=lightblue";
        s << "];\n";
    }
    for (const auto& arc : dag.arcs)
        s << "  p" << arc.from << " -> p" << arc.to << " [label=\"" << arc.label << "\"];\n";
    s << "}\n";
    return s.str();
}

std::string to_text(const LatticeDag& dag)
{
    std::ostringstream s;
    s << "admissible partitions " << dag.params.describe() << ": " << dag.nodes.size() << "\n";
    for (std::size_t k = 0; k < dag.nodes.size(); ++k) {
        s << "\n[" << k << "] " << to_string(dag.nodes[k]) << "  cost " << dag.costs[k];
        if (dag.predecessor_free[k])
            s << "  no-predecessor";
        if (dag.optimum && *dag.optimum == k)
            s << "  OPTIMUM";
        s << "\n";
        for (const auto& arc : dag.arcs)
            if (arc.from == k)
                s << "  -> [" << arc.to << "] " << to_string(dag.nodes[arc.to]) << "  +" << arc.label << "\n";
        s << young_diagram(dag.nodes[k]);
    }
    return s.str();
}

} // namespace sumcol
