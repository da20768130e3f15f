#ifndef SUMCOL_MIS_GRAPH_HPP
#define SUMCOL_MIS_GRAPH_HPP

#include "sumcol/bitset.hpp"
#include "sumcol/graph.hpp"
#include "sumcol/stable_set.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sumcol {

/// Incompatibility graph of a family of vertex sets: one node per set, an
/// edge whenever two sets share a vertex. Built from the maximum independent
/// sets of G, an independent set of this graph is a family of pairwise
/// disjoint maximum independent sets, so its stability number caps how many
/// full-size colour classes one colouring can hold.
class MisGraph {
public:
    MisGraph() = default;

    std::size_t size() const { return members_.size(); }
    std::size_t base_size() const { return base_n_; }
    const Bitset& member(std::size_t i) const { return members_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
    std::size_t edge_count() const;

    /// The incompatibility relation as an ordinary graph.
    Graph to_graph() const;

private:
    friend MisGraph build_mis_graph(const std::vector<std::vector<std::size_t>>&, std::size_t);

    std::size_t base_n_ = 0;
    std::vector<Bitset> members_;
    std::vector<Bitset> adj_;
};

/// `sets` hold 0-based vertices of a graph with `base_n` vertices. Throws
/// std::invalid_argument on an empty set, an out-of-range vertex or a
/// repeated set.
MisGraph build_mis_graph(const std::vector<std::vector<std::size_t>>& sets, std::size_t base_n);

/// alpha of the incompatibility graph; the witness lists pairwise-disjoint members.
AlphaResult alpha_tilde(const MisGraph& mg, const Budget& budget);

/// m = min(floor(n / alpha_bar), #IS, alpha~) over whichever of the last two
/// are known.
std::size_t compute_m(std::size_t n, std::size_t alpha_bar, std::optional<std::size_t> num_is,
    std::optional<std::size_t> alpha_tilde);

} // namespace sumcol

#endif // SUMCOL_MIS_GRAPH_HPP
