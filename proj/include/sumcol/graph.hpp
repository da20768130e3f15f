#ifndef SUMCOL_GRAPH_HPP
#define SUMCOL_GRAPH_HPP

#include "sumcol/bitset.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumcol {

/// Undirected simple graph stored as bitset adjacency rows.
///
/// Vertices are 0-based in this API. The DIMACS reader/writer and all
/// user-facing reports translate to the 1-based labels of the file format.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, std::string name = {});

    std::size_t size() const { return rows_.size(); }
    std::size_t edge_count() const { return edges_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Adds {u, v}. Returns false if the edge was already present.
    /// Throws std::invalid_argument on a self-loop, std::out_of_range on a bad index.
    bool add_edge(std::size_t u, std::size_t v);

    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& neighbours(std::size_t v) const { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(const Graph& o) const { return rows_ == o.rows_; }

private:
    std::string name_;
    std::vector<Bitset> rows_;
    std::size_t edges_ = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads an ASCII DIMACS .col graph. Duplicate and reversed `e` lines collapse
/// to a single edge; self-loops and out-of-range endpoints are errors.
Graph parse_dimacs(std::istream& in, std::string name = {});
Graph parse_dimacs(std::string_view text, std::string name = {});
/// Instance name defaults to the file stem.
Graph read_dimacs_file(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const Graph& g);
std::string to_dimacs(const Graph& g);

Graph complement(const Graph& g);

/// 2|E| / (n(n-1)); throws std::domain_error when n < 2.
double density(const Graph& g);

/// Degree of the 1-based vertex `v`; throws std::out_of_range.
std::size_t degree_in(const Graph& g, std::size_t v);

} // namespace sumcol

#endif // SUMCOL_GRAPH_HPP
