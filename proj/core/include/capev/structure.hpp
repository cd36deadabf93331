#pragma once

#include "capev/graph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace capev {

/// An induced cycle of length >= 4, in cyclic vertex order.
struct HoleWitness {
    std::vector<int> vertices;
    int length() const { return int(vertices.size()); }
};

/// Replays the witness: consecutive vertices adjacent, all other pairs not.
bool is_hole(const Graph& g, const HoleWitness& h);

struct CapWitness {
    HoleWitness hole;
    int apex; // exactly two neighbors on the hole, and those two adjacent
};

struct WheelWitness {
    HoleWitness hole;
    int center; // off the hole, with >= 3 neighbors on it
};

std::optional<std::array<int, 3>> find_triangle(const Graph& g);

/// All induced cycles of length 4..max_len, each exactly once up to rotation
/// and reflection. The callback may return false to stop early.
void for_each_hole(const Graph& g, int max_len, const std::function<bool(const HoleWitness&)>& fn);
std::vector<HoleWitness> enumerate_holes(const Graph& g, int max_len);

std::optional<HoleWitness> has_even_hole(const Graph& g);
std::optional<HoleWitness> find_hole_of_length(const Graph& g, int len);
std::optional<CapWitness> has_cap(const Graph& g);

/// Optional restrictions on the wheel search.
struct WheelConstraints {
    std::vector<int> hole_contains;        // vertices the hole must pass through
    std::optional<int> center;             // the center must be this vertex
    std::optional<int> center_adjacent_to; // the center must see this vertex
};

std::optional<WheelWitness> find_wheel(const Graph& g, const WheelConstraints& c = {});

struct ClassReport {
    bool triangle_free = true;
    bool cap_free = true;
    bool even_hole_free = true;
    bool five_hole_free = true;
    bool is_cube = false;
    std::optional<std::array<int, 3>> triangle;
    std::optional<CapWitness> cap;
    std::optional<HoleWitness> even_hole;
    std::optional<HoleWitness> five_hole;
};

ClassReport classify(const Graph& g);

/// One ear addition: replace hole vertex y (between attachments x and z) by an
/// induced path of fresh internal vertices, optionally joined to y at the
/// listed internal positions (0-based along the ear from the x side).
struct EarAdditionStep {
    HoleWitness hole;
    int x = -1, y = -1, z = -1;
    int ear_internal_count = 0;
    std::vector<int> y_neighbor_positions;
};

struct EarVerdict {
    bool ok = false;
    std::string violation; // empty when ok
};

/// Checks the good-ear conditions against the pre-addition graph: the cycle
/// (V(H) \ {y}) u V(P) must be induced after the addition, y must have an odd
/// number of neighbors on V(P) counting x and z, and neither forbidden wheel
/// may exist. Malformed steps (x,y,z not consecutive on the hole) throw.
EarVerdict validate_good_ear(const Graph& g, const EarAdditionStep& step);

/// Applies a validated step; new vertex ids are appended after g's. When g is
/// triangle-free / even-hole-free the result is re-checked and a violating
/// step is rejected. Throws std::invalid_argument carrying the verdict text.
Graph apply_ear_addition(const Graph& g, const EarAdditionStep& step);

struct CorpusEntry {
    int initial_hole_length = 0;
    std::vector<EarAdditionStep> steps;
    Graph graph;
};

/// Deterministic corpus of (even-hole, triangle)-free skeletons grown from odd
/// holes by validated ear additions. Entries are pairwise non-isomorphic.
std::vector<CorpusEntry> generate_skeleton_corpus(std::uint64_t seed, int max_vertices,
                                                  int max_steps);

/// Corpus JSON: {"graphs": [{"initial_hole": L, "steps": [...], "graph": ...}]}
std::string corpus_to_json(const std::vector<CorpusEntry>& corpus);
std::vector<CorpusEntry> corpus_from_json(const std::string& text);

} // namespace capev
