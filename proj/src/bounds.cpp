#include "sumcol/bounds.hpp"

#include "sumcol/mis_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumcol {

Decomposition decompose(std::size_t n, std::size_t alpha_bar, std::size_t m)
{
    if (alpha_bar < 1)
        throw std::invalid_argument("alpha_bar must be at least 1");
    Decomposition d;
    d.m = std::min(m, n / alpha_bar);
    if (alpha_bar == 1) {
        // every line is full; the (alpha_bar - 1) division is empty
        d.m = n;
        return d;
    }
    const std::size_t rest = n - d.m * alpha_bar;
    d.q = rest / (alpha_bar - 1);
    d.r = rest % (alpha_bar - 1);
    return d;
}

PartitionBound sigma_m0(std::size_t n, std::size_t alpha_bar, std::size_t m)
{
    if (alpha_bar < 1)
        throw std::invalid_argument("alpha_bar must be at least 1");
    if (n == 0)
        return {};
    if (alpha_bar == 1) {
        const std::uint64_t nn = n;
        return {nn * (nn + 1) / 2, IntegerPartition::column(n)};
    }
    const auto d = decompose(n, alpha_bar, m);
    const std::uint64_t a = alpha_bar, mm = d.m, q = d.q, r = d.r;
    const std::uint64_t value = mm * (mm + 1) / 2 * a + q * (2 * mm + q + 1) / 2 * (a - 1) + (mm + q + 1) * r;

    std::vector<std::size_t> parts(d.m, alpha_bar);
    parts.insert(parts.end(), d.q, alpha_bar - 1);
    if (d.r)
        parts.push_back(d.r);
    return {value, IntegerPartition(std::move(parts))};
}

PartitionBound sigma_m(const BoundParams& p)
{
    if (!p.feasible())
        throw std::invalid_argument("infeasible parameters " + p.describe());
    auto free = sigma_m0(p.n, p.alpha_bar, p.m);
    if (free.witness.lines() >= p.s_lower)
        return free;

    // alpha_bar >= 2 here: with alpha_bar = 1 the column already has n >= s lines
    const std::uint64_t s = p.s_lower;
    auto rest = sigma_m0(p.n - p.s_lower, p.alpha_bar - 1, p.m);
    return {s * (s + 1) / 2 + rest.value, add_lines(IntegerPartition::column(p.s_lower), rest.witness)};
}

std::uint64_t lbm_sigma(std::size_t n, std::size_t alpha_bar, std::size_t s_lower)
{
    if (alpha_bar < 1)
        throw std::invalid_argument("alpha_bar must be at least 1");
    return sigma_m(BoundParams{n, alpha_bar, s_lower, n / alpha_bar}).value;
}

std::size_t lb_chi(std::size_t n, std::size_t alpha_bar, std::size_t m)
{
    if (n < 1 || alpha_bar < 1)
        throw std::invalid_argument("lb_chi needs n >= 1 and alpha_bar >= 1");
    if (alpha_bar == 1)
        return n;
    const auto d = decompose(n, alpha_bar, m);
    return d.m + d.q + (d.r != 0 ? 1 : 0);
}

std::string_view to_string(SLowerSource s)
{
    return s == SLowerSource::known_chi_lb ? "known-chi-lb" : "ceil-n-over-alpha";
}

SLower choose_s_lower(std::size_t n, std::size_t alpha_bar, std::optional<std::size_t> known_chi_lb)
{
    if (n < 1 || alpha_bar < 1)
        throw std::invalid_argument("choose_s_lower needs n >= 1 and alpha_bar >= 1");
    const std::size_t ceil = (n + alpha_bar - 1) / alpha_bar;
    if (!known_chi_lb)
        return {ceil, SLowerSource::ceil_n_over_alpha};
    if (*known_chi_lb < 1)
        throw std::invalid_argument("a chromatic number lower bound must be at least 1");
    if (*known_chi_lb >= ceil)
        return {*known_chi_lb, SLowerSource::known_chi_lb};
    return {ceil, SLowerSource::ceil_n_over_alpha};
}

void PipelineConfig::validate() const
{
    alpha_budget.validate();
    enumeration_budget.validate();
    alpha_tilde_budget.validate();
    if (known_chi_lb && *known_chi_lb < 1)
        throw std::invalid_argument("--chi-lb must be at least 1");
    if (known_alpha && *known_alpha < 1)
        throw std::invalid_argument("--alpha must be at least 1");
}

SolverStages run_solver_stages(const Graph& g, const PipelineConfig& cfg)
{
    cfg.validate();
    if (g.size() == 0)
        throw std::invalid_argument("graph has no vertices");
    if (cfg.known_alpha && *cfg.known_alpha > g.size())
        throw std::invalid_argument("--alpha exceeds the vertex count");

    SolverStages st;
    st.instance = g.name();
    st.n = g.size();
    st.edges = g.edge_count();

    if (cfg.known_alpha) {
        st.alpha = *cfg.known_alpha;
        st.alpha_exact = false;
        st.alpha_source = "override";
    } else {
        const auto a = max_independent_set(g, cfg.alpha_budget);
        st.alpha = a.value;
        st.alpha_exact = a.exact;
        st.alpha_source = std::string(to_string(a.method));
        st.alpha_seconds = a.elapsed.count();
    }

    auto e = enumerate_maximum_independent_sets(g, st.alpha, cfg.enumeration_budget);
    st.num_is_seconds = e.elapsed.count();
    st.num_is_truncated = e.truncated;
    if (e.count_exact)
        st.num_is = e.count;
    st.sets = std::move(e.sets);

    if (!st.num_is) {
        st.alpha_tilde_source = "skipped-count";
    } else if (*st.num_is == 0) {
        // no set reaches alpha_bar, so no full line is possible
        st.alpha_tilde = 0;
        st.alpha_tilde_source = "no-sets";
    } else if (st.num_is_truncated) {
        st.alpha_tilde_source = "skipped-cap";
    } else {
        const auto start = Clock::now();
        const auto mg = build_mis_graph(st.sets, st.n);
        const auto at = alpha_tilde(mg, cfg.alpha_tilde_budget);
        if (at.exact) {
            st.alpha_tilde = at.value;
            st.alpha_tilde_source = "exact";
        } else {
            st.alpha_tilde_source = "timeout";
        }
        st.alpha_tilde_seconds = Seconds(Clock::now() - start).count();
    }
    return st;
}

BoundReport finish_report(const SolverStages& st, std::optional<std::size_t> known_chi_lb)
{
    if (known_chi_lb && *known_chi_lb > st.n)
        throw std::invalid_argument("chromatic lower bound exceeds the vertex count");
    BoundReport rep;
    rep.instance = st.instance;
    rep.n = st.n;
    rep.edges = st.edges;
    rep.density = st.n >= 2 ? 2.0 * static_cast<double>(st.edges) / (static_cast<double>(st.n) * (st.n - 1.0)) : 0.0;
    rep.alpha = st.alpha;
    rep.alpha_exact = st.alpha_exact;
    rep.alpha_source = st.alpha_source;
    rep.num_is = st.num_is;
    rep.num_is_truncated = st.num_is_truncated;
    rep.alpha_tilde = st.alpha_tilde;
    rep.alpha_tilde_source = st.alpha_tilde_source;
    rep.alpha_seconds = st.alpha_seconds;
    rep.num_is_seconds = st.num_is_seconds;
    rep.alpha_tilde_seconds = st.alpha_tilde_seconds;

    std::optional<std::size_t> num_is;
    if (st.num_is)
        num_is = static_cast<std::size_t>(std::min<std::uint64_t>(*st.num_is, st.n));
    rep.m = compute_m(st.n, st.alpha, num_is, st.alpha_tilde);
    const auto d = decompose(st.n, st.alpha, rep.m);
    rep.q = d.q;
    rep.r = d.r;

    const auto s = choose_s_lower(st.n, st.alpha, known_chi_lb);
    rep.s_lower = s.value;
    rep.s_lower_source = s.source;

    const auto full = sigma_m(BoundParams{st.n, st.alpha, s.value, rep.m});
    rep.sigma_m = full.value;
    rep.witness = full.witness;
    rep.sigma_m0 = sigma_m0(st.n, st.alpha, rep.m).value;
    rep.lbm_sigma = lbm_sigma(st.n, st.alpha, s.value);
    rep.lb_chi = lb_chi(st.n, st.alpha, rep.m);
    return rep;
}

BoundReport compute_bounds_pipeline(const Graph& g, const PipelineConfig& cfg)
{
    return finish_report(run_solver_stages(g, cfg), cfg.known_chi_lb);
}

bool BoundReport::same_values(const BoundReport& o) const
{
    return instance == o.instance && n == o.n && edges == o.edges && alpha == o.alpha
        && alpha_exact == o.alpha_exact && alpha_source == o.alpha_source && num_is == o.num_is
        && num_is_truncated == o.num_is_truncated && alpha_tilde == o.alpha_tilde
        && alpha_tilde_source == o.alpha_tilde_source && m == o.m && q == o.q && r == o.r
        && s_lower == o.s_lower && s_lower_source == o.s_lower_source && lb_chi == o.lb_chi
        && lbm_sigma == o.lbm_sigma && sigma_m0 == o.sigma_m0 && sigma_m == o.sigma_m && witness == o.witness;
}

} // namespace sumcol
