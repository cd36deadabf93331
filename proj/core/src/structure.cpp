#include "capev/structure.hpp"

#include "capev/canonical.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace capev {

bool is_hole(const Graph& g, const HoleWitness& h) {
    int len = h.length();
    if (len < 4) return false;
    std::set<int> uniq(h.vertices.begin(), h.vertices.end());
    if (int(uniq.size()) != len) return false;
    for (int v : h.vertices)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(h.vertices[i], h.vertices[j]) != consecutive) return false;
        }
    return true;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        int w = common.first();
        if (w >= 0) {
            std::array<int, 3> t{u, v, w};
            std::sort(t.begin(), t.end());
            return t;
        }
    }
    return std::nullopt;
}

namespace {

// Canonical-start DFS over induced paths: the start vertex is the minimum of
// the cycle and the second vertex is smaller than the closing one, so every
// hole appears exactly once up to rotation and reflection.
struct HoleEnumerator {
    const Graph& g;
    int max_len;
    const std::function<bool(const HoleWitness&)>& fn;
    std::vector<int> path;
    VertexSet in_path;
    bool stopped = false;

    HoleEnumerator(const Graph& graph, int ml, const std::function<bool(const HoleWitness&)>& f)
        : g(graph), max_len(ml), fn(f), in_path(graph.vertex_count()) {}

    void run() {
        for (int s = 0; s < g.vertex_count() && !stopped; ++s) {
            path = {s};
            in_path = VertexSet(g.vertex_count());
            in_path.set(s);
            dfs();
        }
    }

    void dfs() {
        if (stopped) return;
        int len = int(path.size());
        int s = path[0], last = path.back();
        const VertexSet& nb = g.neighbors(last);
        for (int u = nb.next(s); u >= 0 && !stopped; u = nb.next(u)) {
            if (in_path.test(u)) continue;
            bool chord = false;
            for (int i = 1; i + 1 < len; ++i)
                if (g.adjacent(u, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (len >= 2 && g.adjacent(u, s)) {
                int cyc_len = len + 1;
                if (cyc_len >= 4 && cyc_len <= max_len && path[1] < u) {
                    HoleWitness h{path};
                    h.vertices.push_back(u);
                    if (!fn(h)) stopped = true;
                }
            } else if (len <= max_len - 2) {
                path.push_back(u);
                in_path.set(u);
                dfs();
                path.pop_back();
                in_path.reset(u);
            }
        }
    }
};

} // namespace

void for_each_hole(const Graph& g, int max_len,
                   const std::function<bool(const HoleWitness&)>& fn) {
    if (max_len < 4) throw std::invalid_argument("hole enumeration needs max_len >= 4");
    HoleEnumerator e(g, max_len, fn);
    e.run();
}

std::vector<HoleWitness> enumerate_holes(const Graph& g, int max_len) {
    std::vector<HoleWitness> out;
    for_each_hole(g, max_len, [&](const HoleWitness& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

std::optional<HoleWitness> has_even_hole(const Graph& g) {
    std::optional<HoleWitness> found;
    if (g.vertex_count() >= 4)
        for_each_hole(g, g.vertex_count(), [&](const HoleWitness& h) {
            if (h.length() % 2 == 0) {
                found = h;
                return false;
            }
            return true;
        });
    return found;
}

std::optional<HoleWitness> find_hole_of_length(const Graph& g, int len) {
    std::optional<HoleWitness> found;
    if (g.vertex_count() >= len)
        for_each_hole(g, len, [&](const HoleWitness& h) {
            if (h.length() == len) {
                found = h;
                return false;
            }
            return true;
        });
    return found;
}

std::optional<CapWitness> has_cap(const Graph& g) {
    std::optional<CapWitness> found;
    if (g.vertex_count() < 5) return found;
    for_each_hole(g, g.vertex_count(), [&](const HoleWitness& h) {
        VertexSet on_hole = VertexSet::of(g.vertex_count(), h.vertices);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (on_hole.test(v)) continue;
            VertexSet hits = g.neighbors(v) & on_hole;
            if (hits.count() != 2) continue;
            int a = hits.first(), b = hits.next(a);
            if (g.adjacent(a, b)) {
                found = CapWitness{h, v};
                return false;
            }
        }
        return true;
    });
    return found;
}

std::optional<WheelWitness> find_wheel(const Graph& g, const WheelConstraints& c) {
    std::optional<WheelWitness> found;
    if (g.vertex_count() < 5) return found;
    for_each_hole(g, g.vertex_count(), [&](const HoleWitness& h) {
        VertexSet on_hole = VertexSet::of(g.vertex_count(), h.vertices);
        for (int v : c.hole_contains)
            if (!on_hole.test(v)) return true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (on_hole.test(v)) continue; // a hole vertex sees exactly two of them anyway
            if (c.center && *c.center != v) continue;
            if (c.center_adjacent_to && !g.adjacent(v, *c.center_adjacent_to)) continue;
            if ((g.neighbors(v) & on_hole).count() >= 3) {
                found = WheelWitness{h, v};
                return false;
            }
        }
        return true;
    });
    return found;
}

ClassReport classify(const Graph& g) {
    ClassReport r;
    if (auto t = find_triangle(g)) {
        r.triangle_free = false;
        r.triangle = t;
    }
    if (auto cw = has_cap(g)) {
        r.cap_free = false;
        r.cap = cw;
    }
    if (auto eh = has_even_hole(g)) {
        r.even_hole_free = false;
        r.even_hole = eh;
    }
    if (auto fh = find_hole_of_length(g, 5)) {
        r.five_hole_free = false;
        r.five_hole = fh;
    }
    r.is_cube = g.vertex_count() == 8 && is_isomorphic(g, cube_graph());
    return r;
}

namespace {

struct EarFrame {
    int ix_prev;              // index of x in the hole sequence
    bool forward;             // hole order runs x, y, z when walking forward
};

// Locates y on the hole and checks x,y,z are consecutive; throws otherwise.
EarFrame locate_segment(const EarAdditionStep& step) {
    const auto& hv = step.hole.vertices;
    int len = int(hv.size());
    for (int i = 0; i < len; ++i) {
        if (hv[i] != step.y) continue;
        int prev = hv[(i + len - 1) % len], next = hv[(i + 1) % len];
        if (prev == step.x && next == step.z) return {(i + len - 1) % len, true};
        if (prev == step.z && next == step.x) return {(i + 1) % len, false};
    }
    throw std::invalid_argument("malformed ear step: x,y,z not consecutive on the hole");
}

void check_step_shape(const Graph& g, const EarAdditionStep& step) {
    if (step.ear_internal_count < 1)
        throw std::invalid_argument("malformed ear step: ear needs at least one internal vertex");
    if (step.hole.length() < 4)
        throw std::invalid_argument("malformed ear step: hole witness too short");
    for (int v : step.hole.vertices)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("malformed ear step: hole vertex out of range");
    std::set<int> pos(step.y_neighbor_positions.begin(), step.y_neighbor_positions.end());
    if (pos.size() != step.y_neighbor_positions.size())
        throw std::invalid_argument("malformed ear step: duplicate y-neighbor position");
    for (int p : pos)
        if (p < 0 || p >= step.ear_internal_count)
            throw std::invalid_argument("malformed ear step: y-neighbor position out of range");
    locate_segment(step);
}

Graph build_extended(const Graph& g, const EarAdditionStep& step) {
    int n = g.vertex_count();
    int t = step.ear_internal_count;
    auto edges = g.edges();
    edges.emplace_back(step.x, n);
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(n + i, n + i + 1);
    edges.emplace_back(n + t - 1, step.z);
    for (int p : step.y_neighbor_positions) edges.emplace_back(step.y, n + p);
    return Graph::from_edges(n + t, edges);
}

// The cycle (V(H) \ {y}) u V(P) in the extended graph, starting at x, running
// along the ear to z and back around the hole.
std::vector<int> replacement_cycle(const Graph& g, const EarAdditionStep& step,
                                   const EarFrame& frame) {
    const auto& hv = step.hole.vertices;
    int len = int(hv.size());
    int n = g.vertex_count();
    std::vector<int> cyc{step.x};
    for (int i = 0; i < step.ear_internal_count; ++i) cyc.push_back(n + i);
    // Walk the hole from z back to x, skipping y.
    int dir = frame.forward ? 1 : -1;
    int iz = ((frame.ix_prev + 2 * dir) % len + len) % len;
    for (int k = 0; k < len - 2; ++k) cyc.push_back(hv[((iz + k * dir) % len + len) % len]);
    return cyc;
}

} // namespace

EarVerdict validate_good_ear(const Graph& g, const EarAdditionStep& step) {
    check_step_shape(g, step);
    EarFrame frame = locate_segment(step);

    // (a) the replacement cycle must be a hole of the extended graph
    Graph ext = build_extended(g, step);
    HoleWitness new_cycle{replacement_cycle(g, step, frame)};
    if (!is_hole(ext, new_cycle))
        return {false, "replacement cycle (V(H) minus y plus the ear) is not induced"};

    // (b) y's neighbors on V(P), counting the attachments x and z, must be odd
    int on_path = 2 + int(step.y_neighbor_positions.size());
    if (on_path % 2 == 0)
        return {false, "y has an even number of neighbors on the ear (" +
                           std::to_string(on_path) + ")"};

    // (c) forbidden wheels in the pre-addition graph
    WheelConstraints c1;
    c1.hole_contains = {step.x, step.y, step.z};
    c1.center_adjacent_to = step.y;
    if (auto w = find_wheel(g, c1))
        return {false, "wheel (H1," + std::to_string(w->center) +
                           ") through x,y,z with center adjacent to y"};
    WheelConstraints c2;
    c2.hole_contains = {step.x, step.z};
    c2.center = step.y;
    if (find_wheel(g, c2))
        return {false, "wheel (H2,y) with both attachments on the rim"};

    return {true, ""};
}

Graph apply_ear_addition(const Graph& g, const EarAdditionStep& step) {
    EarVerdict v = validate_good_ear(g, step);
    if (!v.ok) throw std::invalid_argument("ear step rejected: " + v.violation);
    Graph ext = build_extended(g, step);
    // A good ear addition must not leave the class the input was in; a failure
    // here means the proposing generator produced an invalid step.
    if (!find_triangle(g) && find_triangle(ext))
        throw std::invalid_argument("ear step rejected: creates a triangle");
    if (!has_even_hole(g) && has_even_hole(ext))
        throw std::invalid_argument("ear step rejected: creates an even hole");
    return ext;
}

namespace {

// Proposal heuristic for y's ear neighbors: indices along x = x_0, internals
// x_1..x_t, z = x_{t+1}. Each stretch between consecutive y-neighbors (and the
// ends) must close an odd cycle of length >= 5, so the first index is odd and
// >= 3, gaps are odd and >= 3, and t minus the last index is even and >= 2.
void neighbor_patterns(int t, int last, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    for (int j = last == 0 ? 3 : last + 3; j <= t - 2; j += 2) {
        cur.push_back(j);
        if ((t - j) % 2 == 0) out.push_back(cur);
        neighbor_patterns(t, j, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> legal_neighbor_patterns(int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    neighbor_patterns(t, 0, cur, out);
    return out;
}

} // namespace

std::vector<CorpusEntry> generate_skeleton_corpus(std::uint64_t seed, int max_vertices,
                                                  int max_steps) {
    if (max_vertices < 5)
        throw std::invalid_argument("skeleton corpus needs max_vertices >= 5");
    std::vector<CorpusEntry> entries;
    std::set<std::vector<std::uint64_t>> seen;
    auto remember = [&](const Graph& g) {
        if (g.vertex_count() > 24) return true; // beyond canonical reach, keep
        return seen.insert(canonical_form(g)).second;
    };
    for (int len = 5; len <= max_vertices; len += 2) {
        CorpusEntry e{len, {}, cycle_graph(len)};
        remember(e.graph);
        entries.push_back(std::move(e));
    }
    if (max_steps <= 0) return entries;

    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return int(rng() % std::uint64_t(bound)); };

    int attempts = 80 * max_steps * int(entries.size());
    for (int a = 0; a < attempts; ++a) {
        const CorpusEntry& base = entries[pick(int(entries.size()))];
        if (int(base.steps.size()) >= max_steps) continue;
        int n = base.graph.vertex_count();
        if (n + 5 > max_vertices) continue;

        auto holes = enumerate_holes(base.graph, n);
        if (holes.empty()) continue;
        const HoleWitness& hole = holes[pick(int(holes.size()))];
        int L = hole.length();
        int off = pick(L);
        EarAdditionStep step;
        step.hole = hole;
        step.x = hole.vertices[off];
        step.y = hole.vertices[(off + 1) % L];
        step.z = hole.vertices[(off + 2) % L];

        std::vector<int> ts;
        for (int t = 5; n + t <= max_vertices; t += 2) ts.push_back(t);
        if (ts.empty()) continue;
        step.ear_internal_count = ts[pick(int(ts.size()))];
        auto patterns = legal_neighbor_patterns(step.ear_internal_count);
        if (patterns.empty()) continue;
        const auto& pat = patterns[pick(int(patterns.size()))];
        step.y_neighbor_positions.clear();
        for (int j : pat) step.y_neighbor_positions.push_back(j - 1);

        if (!validate_good_ear(base.graph, step).ok) continue;
        Graph grown;
        try {
            grown = apply_ear_addition(base.graph, step);
        } catch (const std::invalid_argument&) {
            continue; // proposal left the class; filtered out
        }
        if (!remember(grown)) continue;
        CorpusEntry e{base.initial_hole_length, base.steps, std::move(grown)};
        e.steps.push_back(std::move(step));
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace {

nlohmann::json step_to_json(const EarAdditionStep& s) {
    return {{"hole", s.hole.vertices},
            {"x", s.x},
            {"y", s.y},
            {"z", s.z},
            {"ear_internal_count", s.ear_internal_count},
            {"y_neighbor_positions", s.y_neighbor_positions}};
}

EarAdditionStep step_from_json(const nlohmann::json& j) {
    EarAdditionStep s;
    s.hole.vertices = j.at("hole").get<std::vector<int>>();
    s.x = j.at("x").get<int>();
    s.y = j.at("y").get<int>();
    s.z = j.at("z").get<int>();
    s.ear_internal_count = j.at("ear_internal_count").get<int>();
    s.y_neighbor_positions = j.at("y_neighbor_positions").get<std::vector<int>>();
    return s;
}

nlohmann::json adjacency_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto adj = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v).to_vector());
    j["adj"] = std::move(adj);
    return j;
}

Graph adjacency_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    const auto& adj = j.at("adj");
    for (int u = 0; u < n; ++u)
        for (const auto& w : adj.at(u))
            if (u < w.get<int>()) edges.emplace_back(u, w.get<int>());
    return Graph::from_edges(n, edges);
}

} // namespace

std::string corpus_to_json(const std::vector<CorpusEntry>& corpus) {
    nlohmann::json graphs = nlohmann::json::array();
    for (const auto& e : corpus) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : e.steps) steps.push_back(step_to_json(s));
        graphs.push_back({{"initial_hole", e.initial_hole_length},
                          {"steps", std::move(steps)},
                          {"graph", adjacency_json(e.graph)}});
    }
    return nlohmann::json{{"graphs", std::move(graphs)}}.dump();
}

std::vector<CorpusEntry> corpus_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<CorpusEntry> out;
    for (const auto& ej : j.at("graphs")) {
        CorpusEntry e;
        e.initial_hole_length = ej.at("initial_hole").get<int>();
        for (const auto& sj : ej.at("steps")) e.steps.push_back(step_from_json(sj));
        e.graph = adjacency_from_json(ej.at("graph"));
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace capev
