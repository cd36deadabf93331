#include "capev/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace capev {

namespace {

// Iterated 1-dimensional refinement: a vertex's new color is determined by
// its old color and the multiset of neighbor colors.
void refine(const Graph& g, std::vector<int>& colors) {
    int n = g.vertex_count();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{colors[v]};
            const VertexSet& nb = g.neighbors(v);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) s.push_back(colors[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> order;
        for (const auto& [s, v] : sig) order.emplace(s, 0);
        int next = 0;
        for (auto& [s, c] : order) c = next++;
        bool changed = false;
        for (const auto& [s, v] : sig) {
            int c = order[s];
            if (c != colors[v]) changed = true;
            colors[v] = c;
        }
        if (!changed) return;
    }
}

std::vector<std::uint64_t> matrix_bits(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> bits((size_t(n) * n + 63) / 64, 0);
    size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++k)
            if (g.adjacent(perm[i], perm[j]))
                bits[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
    return bits;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best{};
    bool has_best = false;

    void visit(std::vector<int> colors) {
        refine(g, colors);
        int n = g.vertex_count();

        // Find the smallest non-singleton color class.
        std::vector<std::vector<int>> cells(n);
        for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
        const std::vector<int>* branch_cell = nullptr;
        for (const auto& c : cells)
            if (c.size() > 1) {
                branch_cell = &c;
                break;
            }

        if (!branch_cell) {
            std::vector<int> perm(n);
            for (int v = 0; v < n; ++v) perm[colors[v]] = v;
            auto bits = matrix_bits(g, perm);
            if (!has_best || bits < best) {
                best = std::move(bits);
                has_best = true;
            }
            return;
        }

        // Branch on one vertex per twin orbit of the cell: vertices with equal
        // open or closed neighborhoods lead to identical labelings.
        std::vector<int> reps;
        for (int v : *branch_cell) {
            bool dup = false;
            for (int r : reps) {
                VertexSet nv = g.neighbors(v), nr = g.neighbors(r);
                if (nv == nr) { dup = true; break; }
                nv.set(v);
                nr.set(r);
                if (nv == nr) { dup = true; break; }
            }
            if (!dup) reps.push_back(v);
        }
        for (int v : reps) {
            std::vector<int> next = colors;
            for (int u = 0; u < n; ++u)
                if (next[u] >= colors[v] && u != v) ++next[u];
            visit(std::move(next));
        }
    }
};

} // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g) {
    if (g.vertex_count() > 24)
        throw std::invalid_argument("canonical_form supports n <= 24");
    if (g.vertex_count() == 0) return {};
    CanonSearch search{g};
    search.visit(std::vector<int>(g.vertex_count(), 0));
    return search.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace capev
