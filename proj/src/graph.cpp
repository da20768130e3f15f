#include "sumcol/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sumcol {

Graph::Graph(std::size_t n, std::string name)
    : name_(std::move(name))
    , rows_(n, Bitset(n))
{
}

bool Graph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= size() || v >= size())
        throw std::out_of_range("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u + 1));
    if (rows_[u].test(v))
        return false;
    rows_[u].set(v);
    rows_[v].set(u);
    ++edges_;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = rows_[u].find_next(u); v < size(); v = rows_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what)
    , line_(line)
{
}

Graph parse_dimacs(std::istream& in, std::string name)
{
    Graph g;
    bool have_header = false;
    std::size_t ln = 0;
    for (std::string line; std::getline(in, line);) {
        ++ln;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            if (have_header)
                throw ParseError(ln, "duplicate 'p' line");
            std::string format;
            long long n = -1, m = -1;
            if (!(iss >> format >> n >> m) || (format != "edge" && format != "col") || n < 1 || m < 0)
                throw ParseError(ln, "malformed header, expected 'p edge <n> <m>'");
            std::string extra;
            if (iss >> extra)
                throw ParseError(ln, "trailing tokens in header");
            g = Graph(static_cast<std::size_t>(n), name);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header)
                throw ParseError(ln, "edge line before 'p' line");
            long long u = 0, v = 0;
            if (!(iss >> u >> v))
                throw ParseError(ln, "malformed edge line");
            const auto n = static_cast<long long>(g.size());
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ln, "vertex index out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(ln, "self-loop on vertex " + std::to_string(u));
            g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
        } else {
            throw ParseError(ln, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header)
        throw ParseError(ln, "missing 'p edge' line");
    return g;
}

Graph parse_dimacs(std::string_view text, std::string name)
{
    std::istringstream in{std::string(text)};
    return parse_dimacs(in, std::move(name));
}

Graph read_dimacs_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return parse_dimacs(in, path.stem().string());
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    if (!g.name().empty())
        out << "c " << g.name() << '\n';
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g)
{
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

Graph complement(const Graph& g)
{
    Graph c(g.size(), g.name().empty() ? std::string{} : g.name() + "-complement");
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

double density(const Graph& g)
{
    const auto n = static_cast<double>(g.size());
    if (g.size() < 2)
        throw std::domain_error("density needs at least two vertices");
    return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

std::size_t degree_in(const Graph& g, std::size_t v)
{
    if (v < 1 || v > g.size())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return g.degree(v - 1);
}

} // namespace sumcol
