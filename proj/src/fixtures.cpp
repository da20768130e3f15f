#include "sumcol/fixtures.hpp"

#include "sumcol/generators.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef SUMCOL_SOURCE_DATA_DIR
#define SUMCOL_SOURCE_DATA_DIR "data"
#endif

namespace sumcol {

namespace {

    std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open " + path.string());
        std::vector<std::vector<std::string>> rows;
        for (std::string line; std::getline(in, line);) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            std::vector<std::string> cells;
            std::istringstream ss(line);
            for (std::string cell; std::getline(ss, cell, ',');)
                cells.push_back(cell);
            rows.push_back(std::move(cells));
        }
        return rows;
    }

    std::uint64_t number(std::string cell)
    {
        while (!cell.empty() && cell.back() == '*')
            cell.pop_back();
        std::size_t used = 0;
        const auto v = std::stoull(cell, &used);
        if (used != cell.size())
            throw std::invalid_argument("not a number: '" + cell + "'");
        return v;
    }

} // namespace

std::vector<InstanceFixture> load_fixtures(const std::filesystem::path& csv)
{
    const auto rows = read_csv(csv);
    if (rows.empty())
        throw std::runtime_error(csv.string() + ": no header");
    const auto& header = rows.front();
    auto col = [&](const std::string& name) {
        for (std::size_t k = 0; k < header.size(); ++k)
            if (header[k] == name)
                return k;
        throw std::runtime_error(csv.string() + ": missing column " + name);
    };
    const auto c_name = col("instance"), c_n = col("n"), c_d = col("d"), c_alpha = col("alpha"),
               c_is = col("num_is"), c_m = col("m"), c_chi = col("chi"), c_lbchi = col("lb_chi"),
               c_sigma = col("sigma"), c_old = col("sigma_old"), c_lbm = col("lbm_sigma"),
               c_m0 = col("sigma_m0"), c_sm = col("sigma_m"), c_tier = col("tier");

    std::vector<InstanceFixture> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != header.size())
            throw std::runtime_error(csv.string() + ": row " + std::to_string(i) + " has "
                + std::to_string(r.size()) + " cells");
        InstanceFixture f;
        f.name = r[c_name];
        f.n = number(r[c_n]);
        f.density = std::stod(r[c_d]);
        f.alpha = number(r[c_alpha]);
        f.num_is = number(r[c_is]);
        if (r[c_m] != "#is")
            f.m = number(r[c_m]);
        if (auto dash = r[c_chi].find('-'); dash != std::string::npos) {
            f.chi_lo = number(r[c_chi].substr(0, dash));
            f.chi_hi = number(r[c_chi].substr(dash + 1));
        } else {
            f.chi_lo = f.chi_hi = number(r[c_chi]);
        }
        f.lb_chi = number(r[c_lbchi]);
        if (r[c_sigma] != "?") {
            f.sigma = number(r[c_sigma]);
            f.sigma_proved_here = r[c_sigma].ends_with("*");
        }
        f.sigma_old = number(r[c_old]);
        f.lbm_sigma = number(r[c_lbm]);
        f.sigma_m0 = number(r[c_m0]);
        f.sigma_m = number(r[c_sm]);
        f.tier = r[c_tier];
        out.push_back(std::move(f));
    }
    return out;
}

std::map<std::string, std::size_t> load_chi_lower_bounds(const std::filesystem::path& csv)
{
    const auto rows = read_csv(csv);
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2)
            throw std::runtime_error(csv.string() + ": expected instance,chi_lb");
        out[rows[i][0]] = number(rows[i][1]);
    }
    return out;
}

std::vector<FixtureCheck> compare_to_fixture(const BoundReport& r, const InstanceFixture& f)
{
    std::vector<FixtureCheck> out;
    auto add = [&](const char* column, std::uint64_t expected, std::optional<std::uint64_t> computed) {
        out.push_back({column, std::to_string(expected), computed ? std::to_string(*computed) : "?",
            computed && *computed == expected});
    };
    add("alpha", f.alpha, r.alpha);
    add("#is", f.num_is, r.num_is);
    add("m", f.expected_m(), r.m);
    add("LB_chi", f.lb_chi, r.lb_chi);
    add("LBMsigma", f.lbm_sigma, r.lbm_sigma);
    add("SigmaM0", f.sigma_m0, r.sigma_m0);
    add("SigmaM", f.sigma_m, r.sigma_m);
    return out;
}

InstanceFile load_instance_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    InstanceFile f{Graph(0), buf.str(), path.string()};
    f.graph = parse_dimacs(std::string_view(f.bytes), path.stem().string());
    return f;
}

std::optional<InstanceFile> find_instance(const std::filesystem::path& dir, const std::string& name)
{
    for (const char* ext : {".col", ".dimacs"}) {
        const auto p = dir / (name + ext);
        if (std::filesystem::exists(p))
            return load_instance_file(p);
    }
    if (auto g = gen::by_name(name)) {
        g->set_name(name);
        auto bytes = to_dimacs(*g);
        return InstanceFile{std::move(*g), std::move(bytes), "generated"};
    }
    return std::nullopt;
}

std::filesystem::path default_data_dir()
{
    if (const char* env = std::getenv("SUMCOL_DATA_DIR"); env && *env)
        return env;
    return SUMCOL_SOURCE_DATA_DIR;
}

} // namespace sumcol
