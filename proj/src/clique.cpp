#include "sumcol/clique.hpp"

#include <algorithm>
#include <numeric>

namespace sumcol {

struct CliqueSearch::State {
    bool enumerate = false;
    std::size_t target = 0;
    std::size_t cap = 0;
    std::optional<Clock::time_point> deadline;
    CliqueSearchResult result;
    bool stop = false;
};

CliqueSearch::CliqueSearch(const Graph& g)
    : n_(g.size())
    , to_orig_(g.size())
{
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v)
        deg[v] = g.degree(v);
    std::iota(to_orig_.begin(), to_orig_.end(), 0);
    std::stable_sort(to_orig_.begin(), to_orig_.end(),
        [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

    std::vector<std::size_t> to_new(n_);
    for (std::size_t i = 0; i < n_; ++i)
        to_new[to_orig_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i)
        g.neighbours(to_orig_[i]).for_each([&](std::size_t w) { adj_[i].set(to_new[w]); });
}

void CliqueSearch::colour(const Bitset& cand, std::size_t min_colour, std::vector<std::size_t>& order,
    std::vector<std::size_t>& bounds) const
{
    order.clear();
    bounds.clear();
    Bitset uncoloured = cand;
    Bitset klass(n_);
    for (std::size_t k = 1; uncoloured.any(); ++k) {
        klass = uncoloured;
        for (std::size_t v = klass.find_first(); v < n_; v = klass.find_first()) {
            klass.reset(v);
            uncoloured.reset(v);
            klass.subtract(adj_[v]);
            if (k >= min_colour) {
                order.push_back(v);
                bounds.push_back(k);
            }
        }
    }
}

void CliqueSearch::expand(State& st, std::vector<std::size_t>& clique, Bitset& cand)
{
    if (st.stop)
        return;
    if ((++st.result.nodes & 1023u) == 0 && st.deadline && Clock::now() >= *st.deadline) {
        st.stop = true;
        return;
    }

    // smallest colour count that can still matter below this node
    auto needed = [&]() -> std::size_t {
        const std::size_t goal = st.enumerate ? st.target : st.result.best_size + 1;
        return goal > clique.size() ? goal - clique.size() : 1;
    };

    std::vector<std::size_t> order, bounds;
    colour(cand, needed(), order, bounds);

    for (std::size_t i = order.size(); i-- > 0;) {
        if (bounds[i] < needed() || st.stop)
            return;
        const std::size_t v = order[i];
        clique.push_back(v);
        if (st.enumerate && clique.size() == st.target) {
            if (++st.result.count > st.cap) {
                st.result.cap_hit = true;
            } else {
                std::vector<std::size_t> c;
                c.reserve(clique.size());
                for (auto u : clique)
                    c.push_back(to_orig_[u]);
                std::sort(c.begin(), c.end());
                st.result.all.push_back(std::move(c));
            }
        } else {
            Bitset next = cand & adj_[v];
            if (next.none()) {
                if (!st.enumerate && clique.size() > st.result.best_size) {
                    st.result.best_size = clique.size();
                    st.result.best.clear();
                    for (auto u : clique)
                        st.result.best.push_back(to_orig_[u]);
                    std::sort(st.result.best.begin(), st.result.best.end());
                }
            } else {
                expand(st, clique, next);
            }
        }
        clique.pop_back();
        cand.reset(v);
    }
}

std::vector<std::size_t> CliqueSearch::greedy_clique() const
{
    std::vector<std::size_t> out;
    Bitset cand(n_);
    cand.set_all();
    while (cand.any()) {
        std::size_t pick = n_, best = 0;
        cand.for_each([&](std::size_t v) {
            const std::size_t d = cand.intersection_count(adj_[v]);
            if (pick == n_ || d > best) {
                pick = v;
                best = d;
            }
        });
        out.push_back(to_orig_[pick]);
        cand &= adj_[pick];
    }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueSearchResult CliqueSearch::maximum(std::optional<Clock::time_point> deadline)
{
    State st;
    st.deadline = deadline;
    if (n_ == 0) {
        st.result.completed = true;
        return st.result;
    }
    st.result.best = greedy_clique();
    st.result.best_size = st.result.best.size();
    std::vector<std::size_t> clique;
    Bitset cand(n_);
    cand.set_all();
    expand(st, clique, cand);
    st.result.completed = !st.stop;
    return st.result;
}

CliqueSearchResult CliqueSearch::enumerate(std::size_t target, std::size_t cap,
    std::optional<Clock::time_point> deadline)
{
    State st;
    st.enumerate = true;
    st.target = target;
    st.cap = cap;
    st.deadline = deadline;
    if (target == 0 || target > n_) {
        st.result.completed = true;
        return st.result;
    }
    std::vector<std::size_t> clique;
    Bitset cand(n_);
    cand.set_all();
    expand(st, clique, cand);
    st.result.completed = !st.stop;
    std::sort(st.result.all.begin(), st.result.all.end());
    st.result.best_size = target;
    return st.result;
}

} // namespace sumcol
