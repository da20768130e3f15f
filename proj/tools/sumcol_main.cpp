// sumcol: lower bounds on the chromatic sum of DIMACS graphs.
//
//   sumcol bound FILE... [--chi-lb N] [--alpha N] [--format table|csv|json]
//   sumcol table [--long] [--strict] [--only NAME]...
//   sumcol lattice N --alpha A --s S --m M [--dot]
//   sumcol cache clear --cache-dir PATH
//   sumcol generate NAME [-o FILE]
//
// Exit codes: 0 ok, 1 usage, 2 parse/read error, 3 fixture mismatch.

#include "sumcol/cache.hpp"
#include "sumcol/fixtures.hpp"
#include "sumcol/generators.hpp"
#include "sumcol/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace sumcol;
namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_mismatch = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    std::vector<std::string> time_limits;
    std::size_t count_cap = 5000;
    std::string format = "table";
    std::string cache_dir;
};

void add_solver_options(CLI::App* cmd, SolverOptions& o)
{
    cmd->add_option("--time-limit", o.time_limits,
           "Stage budget in seconds, STAGE=SECONDS with STAGE one of alpha, enum, alpha-tilde, all")
        ->take_all()
        ->allow_extra_args(false);
    cmd->add_option("--count-cap", o.count_cap, "Most maximum independent sets kept for the mis-graph")
        ->capture_default_str();
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--cache-dir", o.cache_dir, "Reuse solver results stored here");
}

PipelineConfig make_config(const SolverOptions& o, double default_seconds)
{
    PipelineConfig cfg;
    cfg.alpha_budget.time_limit = Seconds(default_seconds);
    cfg.enumeration_budget.time_limit = Seconds(default_seconds);
    cfg.alpha_tilde_budget.time_limit = Seconds(default_seconds);
    for (const auto& spec : o.time_limits) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw UsageError("--time-limit expects STAGE=SECONDS, got '" + spec + "'");
        const auto stage = spec.substr(0, eq);
        double secs = 0;
        try {
            std::size_t used = 0;
            secs = std::stod(spec.substr(eq + 1), &used);
            if (used != spec.size() - eq - 1)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw UsageError("bad seconds in --time-limit '" + spec + "'");
        }
        if (!(secs > 0))
            throw UsageError("--time-limit must be positive");
        if (stage == "alpha" || stage == "all")
            cfg.alpha_budget.time_limit = Seconds(secs);
        if (stage == "enum" || stage == "all")
            cfg.enumeration_budget.time_limit = Seconds(secs);
        if (stage == "alpha-tilde" || stage == "all")
            cfg.alpha_tilde_budget.time_limit = Seconds(secs);
        if (stage != "alpha" && stage != "enum" && stage != "alpha-tilde" && stage != "all")
            throw UsageError("unknown stage '" + stage + "' in --time-limit");
    }
    if (o.count_cap < 1)
        throw UsageError("--count-cap must be at least 1");
    cfg.enumeration_budget.count_cap = o.count_cap;
    return cfg;
}

void print_reports(const std::vector<BoundReport>& reports, const std::string& format)
{
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        std::cout << arr.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << csv_header() << '\n';
        for (const auto& r : reports)
            std::cout << to_csv_row(r) << '\n';
    } else {
        std::cout << human_table(reports);
    }
}

int cmd_bound(const std::vector<std::string>& files, const SolverOptions& o, std::optional<std::size_t> chi_lb,
    std::optional<std::size_t> alpha)
{
    auto cfg = make_config(o, 60.0);
    cfg.known_chi_lb = chi_lb;
    cfg.known_alpha = alpha;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::optional<ResultCache> cache;
    if (!o.cache_dir.empty())
        cache.emplace(o.cache_dir);

    int status = exit_ok;
    std::vector<BoundReport> reports;
    for (const auto& f : files) {
        InstanceFile inst;
        try {
            inst = load_instance_file(f);
        } catch (const std::exception& e) {
            std::cerr << "sumcol: " << f << ": " << e.what() << '\n';
            status = exit_parse;
            continue;
        }
        try {
            reports.push_back(run_cached(inst.graph, inst.bytes, cfg, cache ? &*cache : nullptr));
        } catch (const std::invalid_argument& e) {
            std::cerr << "sumcol: " << f << ": " << e.what() << '\n';
            if (status == exit_ok)
                status = exit_usage;
        }
    }
    print_reports(reports, o.format);
    return status;
}

struct TableRow {
    InstanceFixture fixture;
    std::string status;  // match | mismatch | skipped
    std::string note;
    std::optional<BoundReport> report;
    std::vector<FixtureCheck> checks;
};

void print_table(const std::vector<TableRow>& rows, const std::string& format)
{
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j{{"instance", row.fixture.name}, {"tier", row.fixture.tier}, {"status", row.status}};
            if (!row.note.empty())
                j["note"] = row.note;
            auto checks = nlohmann::json::array();
            for (const auto& c : row.checks)
                checks.push_back({{"column", c.column}, {"expected", c.expected}, {"computed", c.computed},
                    {"ok", c.ok}});
            j["checks"] = checks;
            j["report"] = row.report ? to_json(*row.report) : nlohmann::json(nullptr);
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << "instance,tier,status,column,expected,computed,ok\n";
        for (const auto& row : rows) {
            if (row.checks.empty())
                std::cout << row.fixture.name << ',' << row.fixture.tier << ',' << row.status << ",,,,\n";
            for (const auto& c : row.checks)
                std::cout << row.fixture.name << ',' << row.fixture.tier << ',' << row.status << ',' << c.column
                          << ',' << c.expected << ',' << c.computed << ',' << (c.ok ? 1 : 0) << '\n';
        }
        return;
    }
    // computed value per column, "computed/expected" where they differ
    std::cout << std::left << std::setw(16) << "instance" << std::right;
    const char* cols[] = {"alpha", "#is", "m", "LB_chi", "LBMsigma", "SigmaM0", "SigmaM"};
    for (const char* c : cols)
        std::cout << std::setw(13) << c;
    std::cout << "  status\n";
    for (const auto& row : rows) {
        std::cout << std::left << std::setw(16) << row.fixture.name << std::right;
        if (row.checks.empty()) {
            for (std::size_t k = 0; k < std::size(cols); ++k)
                std::cout << std::setw(13) << "-";
        }
        for (const auto& c : row.checks)
            std::cout << std::setw(13) << (c.ok ? c.computed : c.computed + "/" + c.expected);
        std::cout << "  " << row.status;
        if (!row.note.empty())
            std::cout << " (" << row.note << ")";
        std::cout << '\n';
    }
}

int cmd_table(const SolverOptions& o, bool long_mode, bool strict, const std::vector<std::string>& only,
    std::string fixtures_path, std::string chi_path, std::string instance_dir)
{
    const auto data = default_data_dir();
    if (fixtures_path.empty())
        fixtures_path = (data / "reference_results.csv").string();
    if (chi_path.empty())
        chi_path = (data / "chi_lower_bounds.csv").string();
    if (instance_dir.empty())
        instance_dir = (data / "instances").string();

    std::vector<InstanceFixture> fixtures;
    std::map<std::string, std::size_t> chi;
    try {
        fixtures = load_fixtures(fixtures_path);
        chi = load_chi_lower_bounds(chi_path);
    } catch (const std::exception& e) {
        std::cerr << "sumcol: " << e.what() << '\n';
        return exit_parse;
    }

    auto cfg = make_config(o, long_mode ? 3600.0 : 60.0);
    std::optional<ResultCache> cache;
    if (!o.cache_dir.empty())
        cache.emplace(o.cache_dir);

    const std::set<std::string> wanted(only.begin(), only.end());
    for (const auto& name : wanted) {
        const bool known = std::any_of(fixtures.begin(), fixtures.end(),
            [&](const InstanceFixture& f) { return f.name == name; });
        if (!known)
            std::cerr << "sumcol: no fixture named " << name << '\n';
    }

    int status = exit_ok;
    std::vector<TableRow> rows;
    for (const auto& f : fixtures) {
        if (!wanted.empty() ? !wanted.contains(f.name) : (f.tier != "desk" && !long_mode))
            continue;
        TableRow row{f, "skipped", {}, std::nullopt, {}};
        std::optional<InstanceFile> inst;
        try {
            inst = find_instance(instance_dir, f.name);
        } catch (const std::exception& e) {
            std::cerr << "sumcol: " << f.name << ": " << e.what() << '\n';
            status = std::max(status, exit_parse);
            row.note = "unreadable";
            rows.push_back(std::move(row));
            continue;
        }
        if (!inst) {
            row.note = "instance unavailable";
            if (strict) {
                row.status = "mismatch";
                status = std::max(status, exit_mismatch);
            }
            rows.push_back(std::move(row));
            continue;
        }
        auto row_cfg = cfg;
        if (auto it = chi.find(f.name); it != chi.end())
            row_cfg.known_chi_lb = it->second;
        row.report = run_cached(inst->graph, inst->bytes, row_cfg, cache ? &*cache : nullptr);
        row.checks = compare_to_fixture(*row.report, f);
        const bool ok = std::all_of(row.checks.begin(), row.checks.end(), [](const FixtureCheck& c) { return c.ok; });
        row.status = ok ? "match" : "mismatch";
        if (!ok)
            status = std::max(status, exit_mismatch);
        rows.push_back(std::move(row));
    }
    print_table(rows, o.format);
    return status;
}

int cmd_lattice(std::size_t n, std::size_t alpha, std::size_t s, std::size_t m, bool dot, std::size_t limit)
{
    const BoundParams p{n, alpha, s, m};
    if (alpha < 1 || s < 1)
        throw UsageError("--alpha and --s must be at least 1");
    if (n > limit)
        throw UsageError("n = " + std::to_string(n) + " exceeds the lattice guard of " + std::to_string(limit)
            + " (raise it with --limit)");
    if (!p.feasible())
        throw UsageError("no admissible partition for " + p.describe());
    const auto dag = lattice_dag(p, limit);
    std::cout << (dot ? to_dot(dag) : to_text(dag));
    return exit_ok;
}

int cmd_generate(const std::string& name, const std::string& out_path)
{
    auto g = gen::by_name(name);
    if (!g)
        throw UsageError("no generator for '" + name + "'");
    g->set_name(name);
    if (out_path.empty() || out_path == "-") {
        write_dimacs(std::cout, *g);
        return exit_ok;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "sumcol: cannot write " << out_path << '\n';
        return exit_parse;
    }
    write_dimacs(out, *g);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lower bounds on the chromatic sum of a graph", "sumcol"};
    app.require_subcommand(1);

    SolverOptions bound_opts;
    std::vector<std::string> files;
    std::optional<std::size_t> chi_lb, alpha;
    auto* bound = app.add_subcommand("bound", "Bounds for DIMACS instances");
    bound->add_option("files", files, "DIMACS .col files")->required();
    add_solver_options(bound, bound_opts);
    bound->add_option("--chi-lb", chi_lb, "Known lower bound on the chromatic number");
    bound->add_option("--alpha", alpha, "Use this stability number instead of solving");

    SolverOptions table_opts;
    bool long_mode = false, strict = false;
    std::vector<std::string> only;
    std::string fixtures_path, chi_path, instance_dir;
    auto* table = app.add_subcommand("table", "Recompute the reference table and compare");
    add_solver_options(table, table_opts);
    table->add_flag("--long", long_mode, "Include long-tier rows and raise stage budgets to an hour");
    table->add_flag("--strict", strict, "Count missing instances as mismatches");
    table->add_option("--only", only, "Restrict to these instances (repeatable)");
    table->add_option("--fixtures", fixtures_path, "Reference table CSV");
    table->add_option("--chi", chi_path, "Chromatic lower bound sidecar CSV");
    table->add_option("--instances", instance_dir, "Directory of NAME.col files");

    std::size_t ln = 0, la = 1, ls = 1, lm = 0, limit = default_lattice_limit;
    bool dot = false;
    auto* lattice = app.add_subcommand("lattice", "Admissible partitions and their successor DAG");
    lattice->add_option("n", ln, "Number of squares")->required();
    lattice->add_option("--alpha", la, "Longest line")->required();
    lattice->add_option("--s", ls, "Fewest lines")->required();
    lattice->add_option("--m", lm, "Most full lines")->required();
    lattice->add_flag("--dot", dot, "Graphviz output");
    lattice->add_option("--limit", limit, "Largest n accepted")->capture_default_str();

    std::string clear_dir;
    auto* cache_cmd = app.add_subcommand("cache", "Result cache maintenance");
    cache_cmd->require_subcommand(1);
    auto* clear = cache_cmd->add_subcommand("clear", "Remove every cached entry");
    clear->add_option("--cache-dir", clear_dir, "Cache directory")->required();

    std::string gen_name, gen_out;
    auto* generate = app.add_subcommand("generate", "Write a constructive benchmark graph as DIMACS");
    generate->add_option("name", gen_name, "myciel5, queen8_12, 2-Insertions_3, ...")->required();
    generate->add_option("-o,--output", gen_out, "Output file (stdout by default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*bound)
            return cmd_bound(files, bound_opts, chi_lb, alpha);
        if (*table)
            return cmd_table(table_opts, long_mode, strict, only, fixtures_path, chi_path, instance_dir);
        if (*lattice)
            return cmd_lattice(ln, la, ls, lm, dot, limit);
        if (*clear) {
            const auto removed = ResultCache(clear_dir).clear();
            std::cout << "removed " << removed << " cache entr" << (removed == 1 ? "y" : "ies") << '\n';
            return exit_ok;
        }
        if (*generate)
            return cmd_generate(gen_name, gen_out);
    } catch (const UsageError& e) {
        std::cerr << "sumcol: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "sumcol: " << e.what() << '\n';
        return exit_parse;
    }
    return exit_usage;
}
