#pragma once

#include "capev/graph.hpp"

#include <optional>
#include <vector>

namespace capev {

/// Exact combinatorial value together with a witness that realizes it:
/// a vertex set for omega/alpha, a proper coloring (vertex -> 1..value)
/// for the chromatic number.
struct OracleResult {
    int value = 0;
    std::vector<int> witness;
};

/// omega(g) with a maximum clique as witness. Branch and bound over bit rows
/// with a greedy-coloring bound.
OracleResult max_clique_size(const Graph& g);

/// alpha(g) with a maximum stable set as witness.
OracleResult max_stable_set_size(const Graph& g);

/// chi(g) with a proper coloring witness (witness[v] in 1..value). Iterative
/// deepening on k with DSATUR-style branching; `upper_hint` only prunes the
/// search and never changes the result. Empty graph -> 0.
OracleResult exact_chromatic(const Graph& g, std::optional<int> upper_hint = std::nullopt);

/// Greedy DSATUR coloring; an upper bound on chi, not necessarily optimal.
OracleResult dsatur_coloring(const Graph& g);

/// Maximal classes of vertices with identical closed neighborhoods, ordered
/// by smallest member; each class is a clique, together they partition V.
std::vector<std::vector<int>> true_twin_classes(const Graph& g);

struct CliqueCutset {
    enum class Status { found, none, not_computed };
    Status status = Status::none;
    std::vector<int> cutset; // meaningful only when status == found
};

/// A clique whose removal leaves more components than g has, when one exists.
/// Searches minimal separators; graphs with n > 24 report not_computed.
/// A disconnected input reports the empty clique.
CliqueCutset has_clique_cutset(const Graph& g);

} // namespace capev
