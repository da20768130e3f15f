#ifndef SUMCOL_GENERATORS_HPP
#define SUMCOL_GENERATORS_HPP

#include "sumcol/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace sumcol::gen {

Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

/// Erdos-Renyi G(n, p) with a fixed seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Generalised Mycielskian with `levels` shadow layers plus an apex.
/// levels == 1 is the classical Mycielski construction.
Graph cone(const Graph& g, std::size_t levels);

/// DIMACS mycielK: the Mycielskian applied K-1 times to K2 (myciel3 = Grotzsch graph).
Graph mycielski(unsigned k);

/// rows x cols queen graph (queenR_C in the COLOR benchmarks).
Graph queen(unsigned rows, unsigned cols);

/// K-Insertions_L: L-1 applications of the (K+1)-layer cone to K2.
Graph insertions(unsigned k, unsigned l);

/// Builds a benchmark by name ("myciel5", "queen8_12", "queen12.12",
/// "2-Insertions_3"); nullopt for names that are not constructive (DSJC, flat, ...).
std::optional<Graph> by_name(std::string_view name);

} // namespace sumcol::gen

#endif // SUMCOL_GENERATORS_HPP
