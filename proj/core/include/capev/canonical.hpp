#pragma once

#include "capev/graph.hpp"

#include <cstdint>
#include <vector>

namespace capev {

/// Canonical adjacency-matrix bitstring for small graphs (n <= 24), computed
/// by iterated color refinement plus branching over non-singleton cells.
/// Two graphs are isomorphic iff their canonical forms (and orders) match.
std::vector<std::uint64_t> canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace capev
