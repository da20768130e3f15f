#ifndef SUMCOL_STABLE_SET_HPP
#define SUMCOL_STABLE_SET_HPP

#include "sumcol/clique.hpp"
#include "sumcol/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace sumcol {

/// Search limits for one solver stage. Time limits are soft: they are
/// checked every 1024 branch nodes.
struct Budget {
    Seconds time_limit{60.0};
    std::size_t count_cap = 5000;

    /// Throws std::invalid_argument unless both limits are strictly positive.
    void validate() const;
};

enum class AlphaMethod { exact_bnb, degree_rule, greedy_coloring };

std::string_view to_string(AlphaMethod m);
AlphaMethod alpha_method_from_string(std::string_view s);

/// alpha(G) when `exact`, otherwise an upper bound on it.
struct AlphaResult {
    std::size_t value = 0;
    bool exact = false;
    Seconds elapsed{0};
    AlphaMethod method = AlphaMethod::exact_bnb;
    std::vector<std::size_t> witness;  ///< 0-based, sorted; empty unless exact
};

/// Independent sets of one size. `sets` is complete iff !truncated; `count`
/// is the exact number of such sets iff count_exact (the search finished in
/// time, even if more than count_cap sets exist).
struct EnumerationResult {
    std::size_t target_size = 0;
    std::vector<std::vector<std::size_t>> sets;  ///< 0-based, each sorted, list sorted
    std::uint64_t count = 0;
    bool truncated = false;
    bool count_exact = true;
    Seconds elapsed{0};
};

/// Exact alpha(G) by maximum clique search on the complement. When the budget
/// runs out the result is the tighter of the two cheap upper bounds below.
AlphaResult max_independent_set(const Graph& g, const Budget& budget);

enum class DegreeRule {
    /// largest k with at least k vertices of complement degree >= k
    as_published,
    /// largest k with at least k vertices of complement degree >= k - 1;
    /// this one is always >= alpha(G)
    sound,
};

/// Degree-counting bound on alpha(G), floored at 1 for a nonempty graph.
std::size_t degree_rule_alpha_bar(const Graph& g, DegreeRule rule = DegreeRule::as_published);

/// Colours of a largest-degree-first greedy colouring of the complement.
std::size_t greedy_coloring_alpha_bar(const Graph& g);

/// All independent sets of exactly `target` vertices. At most
/// budget.count_cap are listed; `truncated` is set when more exist or time
/// runs out.
EnumerationResult enumerate_maximum_independent_sets(const Graph& g, std::size_t target,
    const Budget& budget);

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices);

} // namespace sumcol

#endif // SUMCOL_STABLE_SET_HPP
