#include "capev/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace capev {

namespace {

// ---------------------------------------------------------------- max clique

struct CliqueSearch {
    const Graph& g;
    std::vector<int> best{};
    std::vector<int> current{};

    // Greedy coloring of the candidate set; returns candidates ordered so that
    // color numbers are nondecreasing, used as the branch order and bound.
    void color_sort(const VertexSet& cand, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        VertexSet left = cand;
        int color = 0;
        while (!left.empty()) {
            ++color;
            VertexSet cls = left;
            while (!cls.empty()) {
                int v = cls.first();
                order.push_back(v);
                bound.push_back(color);
                left.reset(v);
                cls.reset(v);
                cls.subtract(g.neighbors(v));
            }
        }
    }

    void expand(const VertexSet& cand) {
        std::vector<int> order, bound;
        color_sort(cand, order, bound);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (int(current.size()) + bound[i] <= int(best.size())) return;
            int v = order[i];
            current.push_back(v);
            VertexSet next(cand.capacity());
            for (int j = 0; j < i; ++j)
                if (g.adjacent(v, order[j])) next.set(order[j]);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
        }
    }
};

// ------------------------------------------------------------ k-colorability

// DSATUR-style branching with per-vertex allowed-color masks and a precolored
// maximum clique. Colors are 1..k, masks use bits 0..k-1.
struct KColoring {
    const Graph& g;
    int k;
    std::vector<int> color;
    std::vector<std::uint64_t> allowed;
    std::uint64_t used_mask = 0;
    int uncolored = 0;

    KColoring(const Graph& graph, int palette) : g(graph), k(palette) {
        int n = g.vertex_count();
        color.assign(n, 0);
        std::uint64_t full = (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
        allowed.assign(n, full);
        uncolored = n;
    }

    bool assign(int v, int c, std::vector<int>& touched) {
        color[v] = c;
        used_mask |= std::uint64_t{1} << (c - 1);
        --uncolored;
        const VertexSet& nb = g.neighbors(v);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (color[w] != 0) continue;
            std::uint64_t bit = std::uint64_t{1} << (c - 1);
            if (allowed[w] & bit) {
                allowed[w] &= ~bit;
                touched.push_back(w);
                if (allowed[w] == 0) return false;
            }
        }
        return true;
    }

    void undo(int v, int c, const std::vector<int>& touched, std::uint64_t prev_used) {
        color[v] = 0;
        used_mask = prev_used;
        ++uncolored;
        for (int w : touched) allowed[w] |= std::uint64_t{1} << (c - 1);
    }

    int pick_vertex() const {
        int best = -1, best_opts = 65, best_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] != 0) continue;
            int opts = __builtin_popcountll(allowed[v]);
            int deg = g.degree(v);
            if (opts < best_opts || (opts == best_opts && deg > best_deg)) {
                best = v;
                best_opts = opts;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve() {
        if (uncolored == 0) return true;
        int v = pick_vertex();
        std::uint64_t cand = allowed[v];
        // Symmetry breaking: a fresh color only via its lowest unused index.
        std::uint64_t unused = ~used_mask;
        if (k < 64) unused &= (std::uint64_t{1} << k) - 1;
        std::uint64_t fresh = unused & (~unused + 1);
        cand &= used_mask | fresh;
        while (cand) {
            int c = __builtin_ctzll(cand) + 1;
            cand &= cand - 1;
            std::vector<int> touched;
            std::uint64_t prev_used = used_mask;
            if (assign(v, c, touched)) {
                if (solve()) return true;
            }
            undo(v, c, touched, prev_used);
        }
        return false;
    }
};

std::optional<std::vector<int>> k_colorable(const Graph& g, int k,
                                            const std::vector<int>& seed_clique) {
    int n = g.vertex_count();
    if (int(seed_clique.size()) > k) return std::nullopt;
    if (k >= n) {
        std::vector<int> triv(n);
        for (int v = 0; v < n; ++v) triv[v] = v + 1;
        return triv;
    }
    if (k > 64) throw std::invalid_argument("exact coloring limited to 64 colors");
    KColoring state(g, k);
    int c = 0;
    for (int v : seed_clique) {
        std::vector<int> touched;
        if (!state.assign(v, ++c, touched)) return std::nullopt;
    }
    if (!state.solve()) return std::nullopt;
    return state.color;
}

OracleResult chromatic_connected(const Graph& g, std::optional<int> upper_hint) {
    OracleResult omega = max_clique_size(g);
    int n = g.vertex_count();
    int lb = omega.value;
    if (n <= 48) {
        OracleResult alpha = max_stable_set_size(g);
        if (alpha.value > 0) lb = std::max(lb, (n + alpha.value - 1) / alpha.value);
    }

    OracleResult greedy = dsatur_coloring(g);
    int ub = greedy.value;
    std::vector<int> ub_witness = greedy.witness;

    // A trustworthy hint can collapse the gap before deepening starts; a wrong
    // hint just fails its feasibility probe.
    if (upper_hint && *upper_hint >= lb && *upper_hint < ub) {
        if (auto w = k_colorable(g, *upper_hint, omega.witness)) {
            ub = *upper_hint;
            ub_witness = *w;
        }
    }

    for (int k = lb; k < ub; ++k)
        if (auto w = k_colorable(g, k, omega.witness)) return {k, *w};
    return {ub, ub_witness};
}

} // namespace

OracleResult max_clique_size(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    CliqueSearch search{g};
    search.expand(VertexSet::all(n));
    std::sort(search.best.begin(), search.best.end());
    return {int(search.best.size()), search.best};
}

OracleResult max_stable_set_size(const Graph& g) {
    return max_clique_size(g.complement());
}

OracleResult dsatur_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, 0);
    std::vector<std::set<int>> sat(n);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] != 0) continue;
            int s = int(sat[u].size()), d = g.degree(u);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                v = u;
                best_sat = s;
                best_deg = d;
            }
        }
        int c = 1;
        while (sat[v].count(c)) ++c;
        color[v] = c;
        used = std::max(used, c);
        const VertexSet& nb = g.neighbors(v);
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (color[w] == 0) sat[w].insert(c);
    }
    return {used, color};
}

OracleResult exact_chromatic(const Graph& g, std::optional<int> upper_hint) {
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    auto comps = connected_components(g);
    if (comps.size() == 1) return chromatic_connected(g, upper_hint);

    std::vector<int> coloring(n, 0);
    int value = 0;
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, std::span<const int>(comp));
        OracleResult r = chromatic_connected(sub.graph, upper_hint);
        for (size_t i = 0; i < comp.size(); ++i) coloring[sub.old_ids[i]] = r.witness[i];
        value = std::max(value, r.value);
    }
    return {value, coloring};
}

std::vector<std::vector<int>> true_twin_classes(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> classes;
    std::vector<VertexSet> closed(n, VertexSet(n));
    for (int v = 0; v < n; ++v) {
        closed[v] = g.neighbors(v);
        closed[v].set(v);
    }
    std::vector<int> cls(n, -1);
    for (int v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        cls[v] = int(classes.size());
        classes.push_back({v});
        for (int u = v + 1; u < n; ++u)
            if (cls[u] < 0 && closed[u] == closed[v]) {
                cls[u] = cls[v];
                classes[cls[v]].push_back(u);
            }
    }
    return classes;
}

namespace {

bool is_clique(const Graph& g, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

// Components of g - removed, as vertex sets.
std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    VertexSet seen = removed;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n);
        std::vector<int> stack{s};
        seen.set(s);
        comp.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const VertexSet& nb = g.neighbors(v);
            for (int w = nb.first(); w >= 0; w = nb.next(w))
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.set(w);
                    stack.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& c) {
    VertexSet nb(c.capacity());
    for (int v = c.first(); v >= 0; v = c.next(v)) nb |= g.neighbors(v);
    nb.subtract(c);
    return nb;
}

// True iff s is a minimal separator: g - s has at least two components whose
// neighborhood is exactly s.
bool is_minimal_separator(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    int full = 0;
    for (const VertexSet& c : components_avoiding(g, s))
        if (neighborhood_of_set(g, c) == s) ++full;
    return full >= 2;
}

} // namespace

CliqueCutset has_clique_cutset(const Graph& g) {
    int n = g.vertex_count();
    if (n > 24) return {CliqueCutset::Status::not_computed, {}};
    if (n <= 2) return {CliqueCutset::Status::none, {}};
    if (!is_connected(g)) return {CliqueCutset::Status::found, {}};

    // Berry-Bordat-Cogis enumeration of minimal separators, each candidate
    // re-verified against the definition before use.
    std::set<std::vector<int>> seps;
    std::vector<VertexSet> queue;
    auto offer = [&](const VertexSet& cand) {
        if (!is_minimal_separator(g, cand)) return;
        auto key = cand.to_vector();
        if (seps.insert(key).second) queue.push_back(cand);
    };
    for (int v = 0; v < n; ++v) {
        VertexSet closed = g.neighbors(v);
        closed.set(v);
        for (const VertexSet& c : components_avoiding(g, closed))
            offer(neighborhood_of_set(g, c));
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexSet s = queue[head];
        for (int x = s.first(); x >= 0; x = s.next(x)) {
            VertexSet removed = s;
            removed |= g.neighbors(x);
            removed.set(x);
            for (const VertexSet& c : components_avoiding(g, removed))
                offer(neighborhood_of_set(g, c));
        }
    }

    std::vector<std::vector<int>> clique_seps;
    for (const auto& key : seps)
        if (is_clique(g, key)) clique_seps.push_back(key);
    if (clique_seps.empty()) return {CliqueCutset::Status::none, {}};
    std::sort(clique_seps.begin(), clique_seps.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return {CliqueCutset::Status::found, clique_seps.front()};
}

} // namespace capev
