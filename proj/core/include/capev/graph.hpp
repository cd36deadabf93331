#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capev {

/// Fixed-capacity vertex set backed by 64-bit words. Vertex ids are 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet all(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }

    int capacity() const { return n_; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Removes every member of `o` from this set.
    VertexSet& subtract(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet& o) const = default;

    /// First member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }
    /// First member strictly after `v`, or -1.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= int(words_.size())) return -1;
        uint64_t w = words_[i] & (~uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return int(i * 64 + __builtin_ctzll(w));
            if (++i >= int(words_.size())) return -1;
            w = words_[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    static VertexSet of(int n, std::span<const int> members) {
        VertexSet s(n);
        for (int v : members) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
            s.set(v);
        }
        return s;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

/// Immutable simple undirected graph. No self-loops, ids exactly 0..n-1,
/// adjacency kept as symmetric bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, VertexSet(n)) {}

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return rows_[v].count(); }
    const VertexSet& neighbors(int v) const { return rows_[v]; }

    /// Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// Result of taking an induced subgraph: the graph plus the old-id list,
/// index i of `old_ids` being the old id of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_ids;
};

/// G[S] with a recorded old->new id map. Throws on out-of-range ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// True iff no edge joins `a` and `b`. Throws when the sets overlap.
bool are_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Common constructions.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
/// K4,4 minus a perfect matching (the cube, 8 vertices).
Graph cube_graph();
Graph petersen_graph();

} // namespace capev
