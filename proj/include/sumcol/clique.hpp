#ifndef SUMCOL_CLIQUE_HPP
#define SUMCOL_CLIQUE_HPP

#include "sumcol/graph.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sumcol {

using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

/// Outcome of a clique search. Vertex indices refer to the searched graph.
struct CliqueSearchResult {
    std::size_t best_size = 0;
    std::vector<std::size_t> best;              ///< a witness of best_size (max mode)
    std::vector<std::vector<std::size_t>> all;  ///< canonical list, at most `cap` entries
    std::uint64_t count = 0;                    ///< cliques found, stored or not
    bool completed = false;                     ///< false if the deadline stopped the search
    bool cap_hit = false;                       ///< count > cap, so `all` is partial
    std::uint64_t nodes = 0;
};

/// Bitset branch-and-bound clique search with a greedy-colouring bound.
///
/// Vertices are renumbered once by descending degree (index ascending on
/// ties); candidate sets are coloured in that order and branched on in
/// reverse colour order. Sequential and deterministic.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g);

    /// Maximum clique; the incumbent starts from a greedy clique.
    CliqueSearchResult maximum(std::optional<Clock::time_point> deadline = std::nullopt);

    /// Counts every clique with exactly `target` vertices and keeps the
    /// first `cap` of them. Counting continues past the cap until the deadline.
    CliqueSearchResult enumerate(std::size_t target, std::size_t cap,
        std::optional<Clock::time_point> deadline = std::nullopt);

private:
    struct State;
    void expand(State& st, std::vector<std::size_t>& clique, Bitset& cand);
    void colour(const Bitset& cand, std::size_t min_colour, std::vector<std::size_t>& order,
        std::vector<std::size_t>& bounds) const;
    std::vector<std::size_t> greedy_clique() const;

    std::size_t n_;
    std::vector<std::size_t> to_orig_;  ///< internal -> original index
    std::vector<Bitset> adj_;           ///< renumbered adjacency
};

} // namespace sumcol

#endif // SUMCOL_CLIQUE_HPP
