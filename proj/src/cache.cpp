#include "sumcol/cache.hpp"

#include "sumcol/report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sumcol {

namespace fs = std::filesystem;

namespace {

    bool is_entry(const fs::path& p)
    {
        if (p.extension() != ".json")
            return false;
        const auto stem = p.stem().string();
        return stem.size() == 64
            && stem.find_first_not_of("0123456789abcdef") == std::string::npos;
    }

} // namespace

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream s;
    s << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i)
        s << std::setw(2) << static_cast<unsigned>(digest[i]);
    return s.str();
}

std::string solver_config_string(const PipelineConfig& cfg)
{
    std::ostringstream s;
    s << stages_schema << ";alpha=" << (cfg.known_alpha ? std::to_string(*cfg.known_alpha) : "none")
      << ";cap=" << cfg.enumeration_budget.count_cap
      << ";t_alpha=" << cfg.alpha_budget.time_limit.count()
      << ";t_enum=" << cfg.enumeration_budget.time_limit.count()
      << ";t_tilde=" << cfg.alpha_tilde_budget.time_limit.count();
    return s.str();
}

std::string cache_key(std::string_view instance_bytes, const PipelineConfig& cfg)
{
    std::string buf(instance_bytes);
    buf += '\0';
    buf += solver_config_string(cfg);
    return sha256_hex(buf);
}

ResultCache::ResultCache(fs::path dir)
    : dir_(std::move(dir))
{
}

std::optional<SolverStages> ResultCache::load(const std::string& key) const
{
    std::ifstream in(dir_ / (key + ".json"));
    if (!in)
        return std::nullopt;
    try {
        return stages_from_json(nlohmann::json::parse(in));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& key, const SolverStages& st) const
{
    fs::create_directories(dir_);
    const auto final_path = dir_ / (key + ".json");
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << to_json(st).dump() << '\n';
    }
    fs::rename(tmp, final_path);
}

std::size_t ResultCache::clear() const
{
    if (!fs::exists(dir_))
        return 0;
    std::size_t removed = 0;
    for (const auto& e : fs::directory_iterator(dir_))
        if (e.is_regular_file() && is_entry(e.path()) && fs::remove(e.path()))
            ++removed;
    return removed;
}

BoundReport run_cached(const Graph& g, std::string_view instance_bytes, const PipelineConfig& cfg,
    const ResultCache* cache)
{
    if (!cache)
        return compute_bounds_pipeline(g, cfg);
    cfg.validate();
    const auto key = cache_key(instance_bytes, cfg);
    if (auto hit = cache->load(key)) {
        hit->instance = g.name();
        auto rep = finish_report(*hit, cfg.known_chi_lb);
        rep.cached = true;
        return rep;
    }
    const auto st = run_solver_stages(g, cfg);
    cache->store(key, st);
    return finish_report(st, cfg.known_chi_lb);
}

} // namespace sumcol
