#ifndef SUMCOL_REPORT_HPP
#define SUMCOL_REPORT_HPP

#include "sumcol/bounds.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sumcol {

/// Version tag written into every JSON report and cache entry.
inline constexpr const char* report_schema = "sumcol.bound-report/1";
inline constexpr const char* stages_schema = "sumcol.solver-stages/1";

/// Flat key/value record. Optional fields are JSON null when unknown.
///
///   schema, instance, n, edges, density, alpha, alpha_exact, alpha_source,
///   num_is, num_is_truncated, alpha_tilde, alpha_tilde_source, m, q, r,
///   s_lower, s_lower_source, lb_chi, lbm_sigma, sigma_m0, sigma_m,
///   witness (array of parts), alpha_seconds, num_is_seconds,
///   alpha_tilde_seconds, cached
nlohmann::json to_json(const BoundReport& r);
BoundReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolverStages& s);
SolverStages stages_from_json(const nlohmann::json& j);

/// Row shaped like the published results table; unknown values are empty.
std::string csv_header();
std::string to_csv_row(const BoundReport& r);
/// Reads back a row written by to_csv_row (timings and witness excluded).
BoundReport report_from_csv_row(const std::string& row);

/// Fixed-width table for terminals.
std::string human_table(const std::vector<BoundReport>& reports);

} // namespace sumcol

#endif // SUMCOL_REPORT_HPP
