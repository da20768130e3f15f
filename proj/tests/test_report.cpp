#include <doctest.h>

#include "sumcol/cache.hpp"
#include "sumcol/fixtures.hpp"
#include "sumcol/generators.hpp"
#include "sumcol/report.hpp"

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

using namespace sumcol;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag)
{
    auto dir = fs::temp_directory_path() / ("sumcol-test-" + tag + "-" + std::to_string(std::random_device{}()));
    fs::remove_all(dir);
    return dir;
}

BoundReport sample(std::optional<std::size_t> chi = 4)
{
    PipelineConfig cfg;
    cfg.known_chi_lb = chi;
    return compute_bounds_pipeline(gen::mycielski(3), cfg);
}

} // namespace

TEST_CASE("json round trip")
{
    const auto r = sample();
    const auto j = to_json(r);
    CHECK(j.at("schema") == "sumcol.bound-report/1");
    CHECK(j.at("sigma_m") == 20);
    CHECK(j.at("witness") == nlohmann::json::array({5, 4, 1, 1}));
    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.same_values(r));
    CHECK(back.alpha_seconds == r.alpha_seconds);

    auto bad = j;
    bad["schema"] = "other/1";
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
}

TEST_CASE("unknown values are null in json and empty in csv")
{
    PipelineConfig cfg;
    cfg.enumeration_budget.time_limit = Seconds(1e-9);
    const auto r = compute_bounds_pipeline(gen::random_graph(90, 0.2, 1), cfg);
    REQUIRE_FALSE(r.num_is);
    CHECK(to_json(r).at("num_is").is_null());
    CHECK(to_json(r).at("alpha_tilde").is_null());
    const auto row = to_csv_row(r);
    CHECK(row.find(",,") != std::string::npos);
    CHECK(report_from_csv_row(row).same_values(r));
    CHECK(report_from_json(to_json(r)).same_values(r));
}

TEST_CASE("property: csv and json carry the same values")
{
    for (const char* name : {"myciel3", "myciel5", "queen5_5", "queen6_6", "2-Insertions_3"}) {
        auto g = *gen::by_name(name);
        g.set_name(name);
        for (std::optional<std::size_t> chi : {std::optional<std::size_t>{}, std::optional<std::size_t>{6}}) {
            PipelineConfig cfg;
            cfg.known_chi_lb = chi;
            const auto r = compute_bounds_pipeline(g, cfg);
            const auto from_json = report_from_json(nlohmann::json::parse(to_json(r).dump()));
            const auto from_csv = report_from_csv_row(to_csv_row(r));
            CAPTURE(name);
            CHECK(from_json.same_values(r));
            CHECK(from_csv.same_values(r));
            CHECK(from_csv.same_values(from_json));
            CHECK(std::abs(from_csv.density - r.density) < 0.005);
        }
    }
}

TEST_CASE("csv header matches the row width")
{
    const auto header = csv_header();
    const auto row = to_csv_row(sample());
    CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
    CHECK_THROWS_AS(report_from_csv_row("a,b,c"), std::invalid_argument);
}

TEST_CASE("human table marks inexact values")
{
    auto r = sample();
    r.alpha_exact = false;
    r.num_is_truncated = true;
    const auto t = human_table({r});
    CHECK(t.find("5~") != std::string::npos);
    CHECK(t.find("1+") != std::string::npos);
}

TEST_CASE("sha256 known answer")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache key depends on instance bytes and solver config only")
{
    PipelineConfig cfg;
    const auto base = cache_key("p edge 2 1\ne 1 2\n", cfg);
    CHECK(base.size() == 64);
    CHECK(cache_key("p edge 2 1\ne 1 2\n", cfg) == base);
    CHECK(cache_key("p edge 2 0\n", cfg) != base);

    auto other = cfg;
    other.known_chi_lb = 5;
    CHECK(cache_key("p edge 2 1\ne 1 2\n", other) == base);
    other = cfg;
    other.enumeration_budget.count_cap = 10;
    CHECK(cache_key("p edge 2 1\ne 1 2\n", other) != base);
    other = cfg;
    other.known_alpha = 1;
    CHECK(cache_key("p edge 2 1\ne 1 2\n", other) != base);
    other = cfg;
    other.alpha_tilde_budget.time_limit = Seconds(5);
    CHECK(cache_key("p edge 2 1\ne 1 2\n", other) != base);
}

TEST_CASE("property: cached and fresh runs agree")
{
    const auto dir = scratch_dir("cache");
    const ResultCache cache(dir);
    for (const char* name : {"myciel3", "myciel4", "queen6_6", "queen7_7", "3-Insertions_3"}) {
        auto g = *gen::by_name(name);
        g.set_name(name);
        const auto bytes = to_dimacs(g);
        for (std::optional<std::size_t> chi : {std::optional<std::size_t>{}, std::optional<std::size_t>{5}}) {
            PipelineConfig cfg;
            cfg.known_chi_lb = chi;
            const auto fresh = compute_bounds_pipeline(g, cfg);
            const auto first = run_cached(g, bytes, cfg, &cache);
            const auto second = run_cached(g, bytes, cfg, &cache);
            CAPTURE(name);
            // the chi bound is not part of the key, so the second config hits too
            CHECK(second.cached);
            CHECK(first.same_values(fresh));
            CHECK(second.same_values(fresh));
        }
    }
    CHECK(cache.clear() == 5);
    CHECK(cache.clear() == 0);
    fs::remove_all(dir);
}

TEST_CASE("corrupt cache entries are treated as misses")
{
    const auto dir = scratch_dir("corrupt");
    const ResultCache cache(dir);
    auto g = gen::mycielski(3);
    g.set_name("myciel3");
    const auto bytes = to_dimacs(g);
    PipelineConfig cfg;
    fs::create_directories(dir);
    {
        std::ofstream(dir / (cache_key(bytes, cfg) + ".json")) << "{ not json";
    }
    const auto r = run_cached(g, bytes, cfg, &cache);
    CHECK_FALSE(r.cached);
    CHECK(run_cached(g, bytes, cfg, &cache).cached);

    std::ofstream(dir / "keep.txt") << "x";
    CHECK(cache.clear() == 1);
    CHECK(fs::exists(dir / "keep.txt"));
    fs::remove_all(dir);
}

TEST_CASE("fixture comparison")
{
    const auto rows = load_fixtures(default_data_dir() / "reference_results.csv");
    const auto it = std::find_if(rows.begin(), rows.end(), [](const InstanceFixture& f) { return f.name == "queen7_7"; });
    REQUIRE(it != rows.end());
    PipelineConfig cfg;
    cfg.known_chi_lb = 7;
    const auto checks = compare_to_fixture(compute_bounds_pipeline(gen::queen(7, 7), cfg), *it);
    REQUIRE(checks.size() == 7);
    for (const auto& c : checks) {
        CAPTURE(c.column);
        CHECK(c.ok);
    }

    auto r = compute_bounds_pipeline(gen::queen(7, 7), cfg);
    r.num_is.reset();
    const auto unknown = compare_to_fixture(r, *it);
    CHECK_FALSE(unknown[1].ok);
    CHECK(unknown[1].computed == "?");
}
