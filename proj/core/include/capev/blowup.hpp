#pragma once

#include "capev/graph.hpp"

#include <string>
#include <vector>

namespace capev {

/// Clique-blowup structure of a total graph: a skeleton F, one multiplicity
/// |Q_v| per skeleton vertex, and the total-vertex -> skeleton-vertex map.
/// Fibers are cliques, complete over skeleton edges and anticomplete
/// otherwise; fiber id ranges are contiguous in skeleton-vertex order.
struct BlowupMap {
    Graph skeleton;
    std::vector<int> multiplicity;
    std::vector<int> assignment;

    int total_vertices() const { return int(assignment.size()); }
    bool nonempty() const {
        for (int m : multiplicity)
            if (m < 1) return false;
        return true;
    }
    /// Total-graph ids of fiber Q_v (contiguous ascending).
    std::vector<int> fiber(int v) const;
};

struct BlowupResult {
    Graph graph;
    BlowupMap map;
};

/// Blows every skeleton vertex up into a clique of the given size (>= 0).
BlowupResult build_blowup(const Graph& skeleton, const std::vector<int>& multiplicity);

/// Inverse construction: quotient by true-twin classes. Every graph is the
/// blowup of its twin quotient; fibers are the classes ordered by smallest
/// member.
BlowupMap recognize_blowup(const Graph& g);

/// Blowup of the odd cycle C_len. Throws for even or short len.
BlowupResult cycle_blowup(int len, const std::vector<int>& multiplicity);
BlowupResult cycle_blowup(int len, int uniform_k);

/// omega of the blowup. For triangle-free skeletons this is the best edge
/// fiber-pair (or lone positive fiber with no positive neighbor); otherwise
/// it falls back to the exact clique oracle on the built graph.
int blowup_omega(const BlowupMap& b);

/// Checks the fiber invariants of `map` against `g`; throws on violation.
void validate_blowup(const Graph& g, const BlowupMap& map);

/// BlowupMap JSON: {"skeleton": {"n", "adj"}, "multiplicity": [...],
/// "assignment": [...]}.
std::string blowup_to_json(const BlowupMap& b);
BlowupMap blowup_from_json(const std::string& text);

} // namespace capev
