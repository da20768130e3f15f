#ifndef SUMCOL_FIXTURES_HPP
#define SUMCOL_FIXTURES_HPP

#include "sumcol/bounds.hpp"
#include "sumcol/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sumcol {

/// One row of the published results table, values as printed.
struct InstanceFixture {
    std::string name;
    std::size_t n = 0;
    double density = 0;
    std::size_t alpha = 0;
    std::uint64_t num_is = 0;
    std::optional<std::size_t> m;  ///< nullopt when the table skipped it (floor(n/alpha) applies)
    std::size_t chi_lo = 0;        ///< chi, or the lower end of its interval
    std::size_t chi_hi = 0;
    std::size_t lb_chi = 0;
    std::optional<std::uint64_t> sigma;  ///< chromatic sum when known
    bool sigma_proved_here = false;      ///< starred rows
    std::uint64_t sigma_old = 0;
    std::uint64_t lbm_sigma = 0;
    std::uint64_t sigma_m0 = 0;
    std::uint64_t sigma_m = 0;
    std::string tier;  ///< desk | long

    /// m the pipeline must produce: the printed m, or floor(n/alpha).
    std::size_t expected_m() const { return m ? *m : n / alpha; }
};

/// Reads the fixture CSV ('#' comment lines, one header line).
std::vector<InstanceFixture> load_fixtures(const std::filesystem::path& csv);

/// instance name -> chi lower bound.
std::map<std::string, std::size_t> load_chi_lower_bounds(const std::filesystem::path& csv);

/// Column-by-column comparison of a computed report against a fixture.
struct FixtureCheck {
    std::string column;
    std::string expected;
    std::string computed;
    bool ok = false;
};

/// Compares alpha, #is, m, LB_chi, LBMsigma, SigmaM0 and SigmaM. An unknown
/// computed #is (counting timed out) never matches.
std::vector<FixtureCheck> compare_to_fixture(const BoundReport& r, const InstanceFixture& f);

/// A graph plus the exact bytes it was read from (the cache key input).
struct InstanceFile {
    Graph graph;
    std::string bytes;
    std::string origin;  ///< file path, or "generated"
};

/// Reads and parses one DIMACS file; the file stem names the graph.
/// Throws std::runtime_error if unreadable, ParseError if malformed.
InstanceFile load_instance_file(const std::filesystem::path& path);

/// dir/NAME.col, else the constructive generator for NAME, else nullopt.
std::optional<InstanceFile> find_instance(const std::filesystem::path& dir, const std::string& name);

/// Directory holding data/ next to the sources, overridable with SUMCOL_DATA_DIR.
std::filesystem::path default_data_dir();

} // namespace sumcol

#endif // SUMCOL_FIXTURES_HPP
