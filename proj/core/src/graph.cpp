#include "capev/graph.hpp"

#include <algorithm>

namespace capev {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.rows_[u].set(v);
        g.rows_[v].set(u);
    }
    return g;
}

int Graph::edge_count() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += degree(v);
    return d / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) {
                g.rows_[u].set(v);
                g.rows_[v].set(u);
            }
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> ids(s.begin(), s.end());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("duplicate vertex in subgraph selector");
    for (int v : ids)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex id out of range");

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j])) edges.emplace_back(int(i), int(j));
    return InducedSubgraph{Graph::from_edges(int(ids.size()), edges), std::move(ids)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    auto ids = s.to_vector();
    return induced_subgraph(g, std::span<const int>(ids));
}

bool are_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("are_anticomplete: sets overlap");
    for (int v = a.first(); v >= 0; v = a.next(v))
        if (g.neighbors(v).intersects(b)) return false;
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    VertexSet seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (size_t head = 0; head < comp.size(); ++head) {
            const VertexSet& nb = g.neighbors(comp[head]);
            for (int w = nb.first(); w >= 0; w = nb.next(w))
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph cube_graph() {
    // K4,4 on {0..3} x {4..7} minus the matching i -- 4+i.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) e.emplace_back(i, 4 + j);
    return Graph::from_edges(8, e);
}

Graph petersen_graph() {
    return Graph::from_edges(10, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {4, 0},
                                  {5, 7},
                                  {7, 9},
                                  {9, 6},
                                  {6, 8},
                                  {8, 5},
                                  {0, 5},
                                  {1, 6},
                                  {2, 7},
                                  {3, 8},
                                  {4, 9}});
}

} // namespace capev
