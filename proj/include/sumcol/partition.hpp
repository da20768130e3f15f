#ifndef SUMCOL_PARTITION_HPP
#define SUMCOL_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumcol {

/// Integer partition of n, seen as a Young diagram: line i (1-based) holds
/// part(i) squares, parts non-increasing. Only nonzero parts are stored;
/// part(i) is 0 past the last line.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Trailing zeros are dropped; throws std::invalid_argument if the
    /// parts are not non-increasing.
    explicit IntegerPartition(std::vector<std::size_t> parts);
    IntegerPartition(std::initializer_list<std::size_t> parts)
        : IntegerPartition(std::vector<std::size_t>(parts))
    {
    }

    /// All-ones partition of n.
    static IntegerPartition column(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t lines() const { return parts_.size(); }
    std::size_t part(std::size_t line) const
    {
        return line >= 1 && line <= parts_.size() ? parts_[line - 1] : 0;
    }
    const std::vector<std::size_t>& parts() const { return parts_; }

    bool operator==(const IntegerPartition&) const = default;
    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<std::size_t> parts_;
    std::size_t n_ = 0;
};

std::string to_string(const IntegerPartition& a);

/// Sum-colouring cost: sum over lines of line * part.
std::uint64_t cost(const IntegerPartition& a);

/// Number of lines: the colour count of the partition.
inline std::size_t chi_cost(const IntegerPartition& a) { return a.lines(); }

/// Line-by-line addition; cost is additive under it.
IntegerPartition add_lines(const IntegerPartition& a, const IntegerPartition& b);

/// Moves one square from line i to line j (1-based). Throws
/// std::invalid_argument if line i is empty or the result is not a partition.
IntegerPartition change(const IntegerPartition& a, std::size_t i, std::size_t j);

/// The four integers that define the relaxed partition problem.
struct BoundParams {
    std::size_t n = 1;
    std::size_t alpha_bar = 1;  ///< no line longer than this
    std::size_t s_lower = 1;    ///< at least this many lines
    std::size_t m = 0;          ///< at most this many lines of length alpha_bar

    /// True iff some partition satisfies every constraint: s_lower <= n and
    /// m * alpha_bar + (n - m)(alpha_bar - 1) >= n.
    bool feasible() const;
    std::string describe() const;
};

bool is_admissible(const IntegerPartition& a, const BoundParams& p);

struct Move {
    std::size_t from = 0;  ///< line i
    std::size_t to = 0;    ///< line j
    IntegerPartition result;
};

/// One-square-down moves: for each line whose last square may drop, the
/// square goes to the first line j > i with a_j < a_i - 1.
std::vector<Move> successor_moves(const IntegerPartition& a);
std::vector<IntegerPartition> successors(const IntegerPartition& a);

enum class PredecessorGuard {
    /// headroom tested on line i-1 against m (the published rule)
    line_above,
    /// headroom tested on the destination line j (experimental)
    target_line,
};

/// One-square-up moves that stay admissible under p. Throws
/// std::invalid_argument if `a` is not admissible.
std::vector<Move> predecessor_moves(const IntegerPartition& a, const BoundParams& p,
    PredecessorGuard guard = PredecessorGuard::line_above);
std::vector<IntegerPartition> predecessors(const IntegerPartition& a, const BoundParams& p,
    PredecessorGuard guard = PredecessorGuard::line_above);

class OracleLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t default_oracle_limit = 40;
inline constexpr std::size_t default_lattice_limit = 15;

/// Every partition of n with parts <= p.alpha_bar, lexicographically
/// decreasing ((3), (2,1), (1,1,1) for n = 3). Throws OracleLimitExceeded
/// above `limit`.
void for_each_partition(std::size_t n, std::size_t max_part,
    const std::function<void(const IntegerPartition&)>& f, std::size_t limit = default_oracle_limit);

/// Admissible partitions under p in the same order.
std::vector<IntegerPartition> enumerate_admissible(const BoundParams& p,
    std::size_t limit = default_oracle_limit);

struct OracleOptimum {
    IntegerPartition partition;
    std::uint64_t cost = 0;
};

/// Brute-force minimum over enumerate_admissible; ties go to the
/// lexicographically largest partition. nullopt when p is infeasible.
std::optional<OracleOptimum> oracle_min(const BoundParams& p, std::size_t limit = default_oracle_limit);

struct LatticeArc {
    std::size_t from = 0;  ///< node index
    std::size_t to = 0;
    std::size_t label = 0;  ///< j - i, the cost increase
};

/// Successor DAG over the admissible partitions.
struct LatticeDag {
    BoundParams params;
    std::vector<IntegerPartition> nodes;
    std::vector<std::uint64_t> costs;
    std::vector<bool> predecessor_free;
    std::vector<LatticeArc> arcs;
    std::optional<std::size_t> optimum;  ///< oracle optimum node
};

LatticeDag lattice_dag(const BoundParams& p, std::size_t limit = default_lattice_limit);

/// Graphviz dot; predecessor-free nodes are drawn doubled, the optimum filled.
std::string to_dot(const LatticeDag& dag);

/// One row of '#' per line, trailing nothing for empty lines.
std::string young_diagram(const IntegerPartition& a);

/// Plain text listing: each node with cost, arcs, and its diagram.
std::string to_text(const LatticeDag& dag);

} // namespace sumcol

#endif // SUMCOL_PARTITION_HPP
