#ifndef SUMCOL_BOUNDS_HPP
#define SUMCOL_BOUNDS_HPP

#include "sumcol/graph.hpp"
#include "sumcol/partition.hpp"
#include "sumcol/stable_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumcol {

/// n - m*alpha_bar = q*(alpha_bar - 1) + r, 0 <= r < alpha_bar - 1, with m
/// clamped to floor(n / alpha_bar). For alpha_bar = 1, m = n and q = r = 0.
struct Decomposition {
    std::size_t m = 0;
    std::size_t q = 0;
    std::size_t r = 0;
};

Decomposition decompose(std::size_t n, std::size_t alpha_bar, std::size_t m);

struct PartitionBound {
    std::uint64_t value = 0;
    IntegerPartition witness;
};

/// Optimum of the partition problem without the minimum-line constraint:
/// (alpha_bar^m, (alpha_bar-1)^q, r) in closed form.
PartitionBound sigma_m0(std::size_t n, std::size_t alpha_bar, std::size_t m);

/// Optimum of the full partition problem. When the unconstrained optimum has
/// fewer than s_lower lines, one square is pinned to each of the first
/// s_lower lines and the rest is solved with alpha_bar - 1.
/// Throws std::invalid_argument on infeasible params.
PartitionBound sigma_m(const BoundParams& p);

/// sigma_m with the m constraint removed (m = floor(n / alpha_bar)).
std::uint64_t lbm_sigma(std::size_t n, std::size_t alpha_bar, std::size_t s_lower);

/// Fewest lines over the same relaxation: m + q + [r != 0] (n when alpha_bar = 1).
std::size_t lb_chi(std::size_t n, std::size_t alpha_bar, std::size_t m);

enum class SLowerSource { known_chi_lb, ceil_n_over_alpha };
std::string_view to_string(SLowerSource s);

struct SLower {
    std::size_t value = 1;
    SLowerSource source = SLowerSource::ceil_n_over_alpha;
};

/// max(known_chi_lb, ceil(n / alpha_bar)); both bound the chromatic strength
/// from below.
SLower choose_s_lower(std::size_t n, std::size_t alpha_bar, std::optional<std::size_t> known_chi_lb);

struct PipelineConfig {
    Budget alpha_budget;
    Budget enumeration_budget;  ///< its count_cap bounds the mis-graph size
    Budget alpha_tilde_budget;
    std::optional<std::size_t> known_chi_lb;
    std::optional<std::size_t> known_alpha;

    void validate() const;
};

/// Outputs of the expensive stages, everything the bound formulas need.
/// This is what the result cache stores.
struct SolverStages {
    std::string instance;
    std::size_t n = 0;
    std::size_t edges = 0;

    std::size_t alpha = 0;
    bool alpha_exact = false;
    std::string alpha_source;  ///< exact-bnb | degree-rule | greedy-coloring | override
    double alpha_seconds = 0;

    std::optional<std::uint64_t> num_is;  ///< nullopt when counting timed out
    bool num_is_truncated = false;        ///< listing incomplete (cap or time)
    double num_is_seconds = 0;
    std::vector<std::vector<std::size_t>> sets;  ///< up to the cap, 0-based

    std::optional<std::size_t> alpha_tilde;
    std::string alpha_tilde_source;  ///< exact | no-sets | skipped-cap | skipped-count | timeout
    double alpha_tilde_seconds = 0;
};

SolverStages run_solver_stages(const Graph& g, const PipelineConfig& cfg);

struct BoundReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t edges = 0;
    double density = 0;

    std::size_t alpha = 0;
    bool alpha_exact = false;
    std::string alpha_source;
    std::optional<std::uint64_t> num_is;
    bool num_is_truncated = false;
    std::optional<std::size_t> alpha_tilde;
    std::string alpha_tilde_source;

    std::size_t m = 0;
    std::size_t q = 0;
    std::size_t r = 0;
    std::size_t s_lower = 1;
    SLowerSource s_lower_source = SLowerSource::ceil_n_over_alpha;

    std::size_t lb_chi = 0;
    std::uint64_t lbm_sigma = 0;
    std::uint64_t sigma_m0 = 0;
    std::uint64_t sigma_m = 0;
    IntegerPartition witness;

    double alpha_seconds = 0;
    double num_is_seconds = 0;
    double alpha_tilde_seconds = 0;
    bool cached = false;

    /// Equality on every field except timings and the cached flag.
    bool same_values(const BoundReport& o) const;
};

/// Bound formulas on top of finished solver stages.
BoundReport finish_report(const SolverStages& stages, std::optional<std::size_t> known_chi_lb);

/// The whole cascade: alpha (exact, else a cheap upper bound), #IS (exact,
/// else floor(n/alpha)), the mis-graph and its alpha (else #IS), m, then
/// the bounds.
BoundReport compute_bounds_pipeline(const Graph& g, const PipelineConfig& cfg);

} // namespace sumcol

#endif // SUMCOL_BOUNDS_HPP
