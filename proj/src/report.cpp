#include "sumcol/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sumcol {

using nlohmann::json;

namespace {

    template <typename T> json opt(const std::optional<T>& v) { return v ? json(*v) : json(nullptr); }

    template <typename T> std::optional<T> opt_from(const json& j, const char* key)
    {
        if (!j.contains(key) || j.at(key).is_null())
            return std::nullopt;
        return j.at(key).get<T>();
    }

    SLowerSource s_source_from(const std::string& s)
    {
        if (s == to_string(SLowerSource::known_chi_lb))
            return SLowerSource::known_chi_lb;
        if (s == to_string(SLowerSource::ceil_n_over_alpha))
            return SLowerSource::ceil_n_over_alpha;
        throw std::invalid_argument("unknown s_lower source '" + s + "'");
    }

    std::string fixed(double v, int digits)
    {
        std::ostringstream s;
        s << std::fixed << std::setprecision(digits) << v;
        return s.str();
    }

    std::vector<std::string> split(const std::string& row, char sep)
    {
        std::vector<std::string> out;
        std::string cur;
        for (char c : row) {
            if (c == sep) {
                out.push_back(cur);
                cur.clear();
            } else if (c != '\r' && c != '\n') {
                cur += c;
            }
        }
        out.push_back(cur);
        return out;
    }

} // namespace

json to_json(const BoundReport& r)
{
    return json{
        {"schema", report_schema},
        {"instance", r.instance},
        {"n", r.n},
        {"edges", r.edges},
        {"density", r.density},
        {"alpha", r.alpha},
        {"alpha_exact", r.alpha_exact},
        {"alpha_source", r.alpha_source},
        {"num_is", opt(r.num_is)},
        {"num_is_truncated", r.num_is_truncated},
        {"alpha_tilde", opt(r.alpha_tilde)},
        {"alpha_tilde_source", r.alpha_tilde_source},
        {"m", r.m},
        {"q", r.q},
        {"r", r.r},
        {"s_lower", r.s_lower},
        {"s_lower_source", std::string(to_string(r.s_lower_source))},
        {"lb_chi", r.lb_chi},
        {"lbm_sigma", r.lbm_sigma},
        {"sigma_m0", r.sigma_m0},
        {"sigma_m", r.sigma_m},
        {"witness", r.witness.parts()},
        {"alpha_seconds", r.alpha_seconds},
        {"num_is_seconds", r.num_is_seconds},
        {"alpha_tilde_seconds", r.alpha_tilde_seconds},
        {"cached", r.cached},
    };
}

BoundReport report_from_json(const json& j)
{
    if (j.value("schema", std::string{}) != report_schema)
        throw std::invalid_argument("not a " + std::string(report_schema) + " record");
    BoundReport r;
    r.instance = j.at("instance").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.edges = j.at("edges").get<std::size_t>();
    r.density = j.at("density").get<double>();
    r.alpha = j.at("alpha").get<std::size_t>();
    r.alpha_exact = j.at("alpha_exact").get<bool>();
    r.alpha_source = j.at("alpha_source").get<std::string>();
    r.num_is = opt_from<std::uint64_t>(j, "num_is");
    r.num_is_truncated = j.at("num_is_truncated").get<bool>();
    r.alpha_tilde = opt_from<std::size_t>(j, "alpha_tilde");
    r.alpha_tilde_source = j.at("alpha_tilde_source").get<std::string>();
    r.m = j.at("m").get<std::size_t>();
    r.q = j.at("q").get<std::size_t>();
    r.r = j.at("r").get<std::size_t>();
    r.s_lower = j.at("s_lower").get<std::size_t>();
    r.s_lower_source = s_source_from(j.at("s_lower_source").get<std::string>());
    r.lb_chi = j.at("lb_chi").get<std::size_t>();
    r.lbm_sigma = j.at("lbm_sigma").get<std::uint64_t>();
    r.sigma_m0 = j.at("sigma_m0").get<std::uint64_t>();
    r.sigma_m = j.at("sigma_m").get<std::uint64_t>();
    r.witness = IntegerPartition(j.at("witness").get<std::vector<std::size_t>>());
    r.alpha_seconds = j.value("alpha_seconds", 0.0);
    r.num_is_seconds = j.value("num_is_seconds", 0.0);
    r.alpha_tilde_seconds = j.value("alpha_tilde_seconds", 0.0);
    r.cached = j.value("cached", false);
    return r;
}

json to_json(const SolverStages& s)
{
    return json{
        {"schema", stages_schema},
        {"instance", s.instance},
        {"n", s.n},
        {"edges", s.edges},
        {"alpha", s.alpha},
        {"alpha_exact", s.alpha_exact},
        {"alpha_source", s.alpha_source},
        {"alpha_seconds", s.alpha_seconds},
        {"num_is", opt(s.num_is)},
        {"num_is_truncated", s.num_is_truncated},
        {"num_is_seconds", s.num_is_seconds},
        {"sets", s.sets},
        {"alpha_tilde", opt(s.alpha_tilde)},
        {"alpha_tilde_source", s.alpha_tilde_source},
        {"alpha_tilde_seconds", s.alpha_tilde_seconds},
    };
}

SolverStages stages_from_json(const json& j)
{
    if (j.value("schema", std::string{}) != stages_schema)
        throw std::invalid_argument("not a " + std::string(stages_schema) + " record");
    SolverStages s;
    s.instance = j.at("instance").get<std::string>();
    s.n = j.at("n").get<std::size_t>();
    s.edges = j.at("edges").get<std::size_t>();
    s.alpha = j.at("alpha").get<std::size_t>();
    s.alpha_exact = j.at("alpha_exact").get<bool>();
    s.alpha_source = j.at("alpha_source").get<std::string>();
    s.alpha_seconds = j.at("alpha_seconds").get<double>();
    s.num_is = opt_from<std::uint64_t>(j, "num_is");
    s.num_is_truncated = j.at("num_is_truncated").get<bool>();
    s.num_is_seconds = j.at("num_is_seconds").get<double>();
    s.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
    s.alpha_tilde = opt_from<std::size_t>(j, "alpha_tilde");
    s.alpha_tilde_source = j.at("alpha_tilde_source").get<std::string>();
    s.alpha_tilde_seconds = j.at("alpha_tilde_seconds").get<double>();
    return s;
}

std::string csv_header()
{
    return "instance,n,edges,d,alpha,alpha_exact,alpha_source,alpha_time,num_is,num_is_truncated,num_is_time,"
           "alpha_tilde,alpha_tilde_source,alpha_tilde_time,m,q,r,s_lower,s_lower_source,lb_chi,lbm_sigma,"
           "sigma_m0,sigma_m,witness,cached";
}

std::string to_csv_row(const BoundReport& r)
{
    std::ostringstream s;
    std::string witness;
    for (auto x : r.witness.parts())
        witness += (witness.empty() ? "" : " ") + std::to_string(x);
    s << r.instance << ',' << r.n << ',' << r.edges << ',' << fixed(r.density, 2) << ',' << r.alpha << ','
      << (r.alpha_exact ? 1 : 0) << ',' << r.alpha_source << ',' << fixed(r.alpha_seconds, 3) << ','
      << (r.num_is ? std::to_string(*r.num_is) : "") << ',' << (r.num_is_truncated ? 1 : 0) << ','
      << fixed(r.num_is_seconds, 3) << ',' << (r.alpha_tilde ? std::to_string(*r.alpha_tilde) : "") << ','
      << r.alpha_tilde_source << ',' << fixed(r.alpha_tilde_seconds, 3) << ',' << r.m << ',' << r.q << ','
      << r.r << ',' << r.s_lower << ',' << to_string(r.s_lower_source) << ',' << r.lb_chi << ','
      << r.lbm_sigma << ',' << r.sigma_m0 << ',' << r.sigma_m << ',' << witness << ',' << (r.cached ? 1 : 0);
    return s.str();
}

BoundReport report_from_csv_row(const std::string& row)
{
    const auto f = split(row, ',');
    if (f.size() != 25)
        throw std::invalid_argument("expected 25 CSV fields, got " + std::to_string(f.size()));
    auto u = [](const std::string& x) { return static_cast<std::size_t>(std::stoull(x)); };
    BoundReport r;
    r.instance = f[0];
    r.n = u(f[1]);
    r.edges = u(f[2]);
    r.density = std::stod(f[3]);
    r.alpha = u(f[4]);
    r.alpha_exact = f[5] == "1";
    r.alpha_source = f[6];
    r.alpha_seconds = std::stod(f[7]);
    if (!f[8].empty())
        r.num_is = std::stoull(f[8]);
    r.num_is_truncated = f[9] == "1";
    r.num_is_seconds = std::stod(f[10]);
    if (!f[11].empty())
        r.alpha_tilde = u(f[11]);
    r.alpha_tilde_source = f[12];
    r.alpha_tilde_seconds = std::stod(f[13]);
    r.m = u(f[14]);
    r.q = u(f[15]);
    r.r = u(f[16]);
    r.s_lower = u(f[17]);
    r.s_lower_source = s_source_from(f[18]);
    r.lb_chi = u(f[19]);
    r.lbm_sigma = std::stoull(f[20]);
    r.sigma_m0 = std::stoull(f[21]);
    r.sigma_m = std::stoull(f[22]);
    std::vector<std::size_t> parts;
    std::istringstream ws(f[23]);
    for (std::size_t x; ws >> x;)
        parts.push_back(x);
    r.witness = IntegerPartition(std::move(parts));
    r.cached = f[24] == "1";
    return r;
}

std::string human_table(const std::vector<BoundReport>& reports)
{
    std::ostringstream s;
    auto row = [&](auto... cols) {
        const int widths[] = {16, 6, 6, 7, 9, 7, 5, 7, 8, 10, 10, 10};
        int k = 0;
        ((s << std::setw(widths[k++]) << cols), ...);
        s << '\n';
    };
    row("instance", "n", "d", "alpha", "#is", "m", "s", "LBchi", "q,r", "LBMsigma", "SigmaM0", "SigmaM");
    for (const auto& r : reports) {
        std::string alpha = std::to_string(r.alpha) + (r.alpha_exact ? "" : "~");
        std::string num_is = r.num_is ? std::to_string(*r.num_is) : "?";
        if (r.num_is && r.num_is_truncated)
            num_is += "+";
        row(r.instance, r.n, fixed(r.density, 2), alpha, num_is, r.m, r.s_lower, r.lb_chi,
            std::to_string(r.q) + "," + std::to_string(r.r), r.lbm_sigma, r.sigma_m0, r.sigma_m);
    }
    return s.str();
}

} // namespace sumcol
