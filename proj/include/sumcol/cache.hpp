#ifndef SUMCOL_CACHE_HPP
#define SUMCOL_CACHE_HPP

#include "sumcol/bounds.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace sumcol {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Solver-relevant part of a config: alpha override, cap, stage time limits.
/// The chi lower bound is left out, it only feeds the closed forms.
std::string solver_config_string(const PipelineConfig& cfg);

/// SHA-256 over the instance bytes and solver_config_string(cfg).
std::string cache_key(std::string_view instance_bytes, const PipelineConfig& cfg);

/// Directory of <key>.json files, one SolverStages record each.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    /// nullopt on a miss or an unreadable entry.
    std::optional<SolverStages> load(const std::string& key) const;
    void store(const std::string& key, const SolverStages& st) const;
    /// Removes every cache entry, returns how many.
    std::size_t clear() const;

private:
    std::filesystem::path dir_;
};

/// compute_bounds_pipeline with the solver stages served from `cache` when
/// present. A hit sets BoundReport::cached.
BoundReport run_cached(const Graph& g, std::string_view instance_bytes, const PipelineConfig& cfg,
    const ResultCache* cache);

} // namespace sumcol

#endif // SUMCOL_CACHE_HPP
