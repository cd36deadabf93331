#include "capev/coloring.hpp"

#include "capev/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace capev {

int compute_bound(const BoundParams& params, int omega) {
    if (omega < 0) throw std::invalid_argument("negative omega");
    int d = 2 * params.q;
    return (params.p * omega + d - 1) / d;
}

Rational base_threshold(const BoundParams& params) {
    return max(Rational(2L * params.q * (params.p - params.q - 2), params.p - 2 * params.q),
               Rational(2 * params.q));
}

std::vector<int> select_transversal(const BlowupMap& b, const BoundParams& params) {
    std::vector<int> t;
    for (int v = 0; v < b.skeleton.vertex_count(); ++v) {
        auto fib = b.fiber(v);
        int take = std::min<int>(params.q, int(fib.size()));
        t.insert(t.end(), fib.begin(), fib.begin() + take);
    }
    std::sort(t.begin(), t.end());
    return t;
}

namespace {

void structural_check(bool ok, const std::string& claim) {
    if (!ok) throw std::logic_error("transversal partition violates: " + claim);
}

} // namespace

TransversalPartition partition_v1_v2(const BlowupMap& b, const BoundParams& params, int omega) {
    const Graph& f = b.skeleton;
    int s = f.vertex_count();
    if (find_triangle(f)) throw std::invalid_argument("partition requires a triangle-free skeleton");
    if (!is_connected(f)) throw std::invalid_argument("partition requires a connected skeleton");
    if (s < 2)
        throw std::invalid_argument("partition requires at least two fibers (a lone fiber is a clique)");
    for (int m : b.multiplicity)
        if (m < 1) throw std::invalid_argument("partition requires nonempty fibers");
    if (omega != blowup_omega(b)) throw std::invalid_argument("omega does not match the blowup");
    if (Rational(omega) <= base_threshold(params))
        throw std::invalid_argument("omega not above the base threshold");

    int q = params.q;
    std::vector<bool> in_v1(s, false), big(s, false);
    for (auto [u, v] : f.edges()) {
        int lo = std::min(b.multiplicity[u], b.multiplicity[v]);
        int hi = std::max(b.multiplicity[u], b.multiplicity[v]);
        if (lo <= q - 1 && hi >= omega - q + 1) {
            in_v1[u] = in_v1[v] = true;
            big[b.multiplicity[u] >= b.multiplicity[v] ? u : v] = true;
        }
    }

    TransversalPartition part;
    part.t_set = select_transversal(b, params);
    int n = b.total_vertices();
    VertexSet t_bits = VertexSet::of(n, part.t_set);
    VertexSet v1_bits(n), v2_bits(n);
    for (int i = 0; i < n; ++i) {
        if (in_v1[b.assignment[i]]) {
            part.v1.push_back(i);
            v1_bits.set(i);
        } else {
            part.v2.push_back(i);
            v2_bits.set(i);
        }
    }
    for (int v = 0; v < s; ++v) {
        if (!big[v]) continue;
        auto fib = b.fiber(v);
        std::vector<int> k(fib.begin() + std::min<int>(q, int(fib.size())), fib.end());
        if (!k.empty()) part.v1_cliques.push_back(std::move(k));
    }

    // Certify every structural claim the recursion relies on.
    Graph g = build_blowup(b.skeleton, b.multiplicity).graph;
    for (int v = 0; v < s; ++v) {
        int in_t = 0;
        for (int i : part.t_set)
            if (b.assignment[i] == v) ++in_t;
        structural_check(in_t == std::min(q, b.multiplicity[v]),
                         "|T meet Q_v| = min{q, |Q_v|}");
    }
    {
        std::vector<int> t_mult(s);
        for (int v = 0; v < s; ++v) t_mult[v] = std::min(q, b.multiplicity[v]);
        structural_check(blowup_omega(BlowupMap{f, t_mult, {}}) <= 2 * q,
                         "omega(G[T]) <= 2q");
    }
    VertexSet v1_rest = v1_bits, v2_rest = v2_bits;
    v1_rest.subtract(t_bits);
    v2_rest.subtract(t_bits);
    VertexSet clique_union(n);
    for (const auto& k : part.v1_cliques) {
        for (size_t i = 0; i < k.size(); ++i)
            for (size_t j = i + 1; j < k.size(); ++j)
                structural_check(g.adjacent(k[i], k[j]), "V1 minus T splits into cliques");
        structural_check(int(k.size()) <= omega - 1 - q,
                         "V1 minus T cliques have size <= omega-1-q");
        for (int i : k) clique_union.set(i);
    }
    structural_check(clique_union == v1_rest, "V1 minus T is covered by the cliques");
    for (size_t a = 0; a < part.v1_cliques.size(); ++a)
        for (size_t c = a + 1; c < part.v1_cliques.size(); ++c)
            structural_check(are_anticomplete(g, VertexSet::of(n, part.v1_cliques[a]),
                                              VertexSet::of(n, part.v1_cliques[c])),
                             "V1 minus T cliques are pairwise anticomplete");
    structural_check(are_anticomplete(g, v1_rest, v2_rest),
                     "V1 minus T is anticomplete to V2 minus T");
    {
        std::vector<int> rest_mult(s, 0);
        for (int v = 0; v < s; ++v)
            if (!in_v1[v]) rest_mult[v] = std::max(0, b.multiplicity[v] - q);
        structural_check(blowup_omega(BlowupMap{f, rest_mult, {}}) <= omega - 2 * q,
                         "omega(G[V2 minus T]) <= omega - 2q");
    }
    return part;
}

BaseColorer exact_base_colorer() {
    return [](const Graph& g, int budget_hint) { return exact_chromatic(g, budget_hint); };
}

namespace {

// A sub-blowup during the recursion: fibers of the current skeleton together
// with the original total-graph ids of each fiber's surviving vertices.
struct SubBlowup {
    Graph skeleton;
    std::vector<int> mult;
    std::vector<std::vector<int>> global_ids;
};

struct EngineState {
    const BoundParams& params;
    const BaseColorer& base;
    Rational threshold;
    std::vector<int>& coloring; // indexed by original total-graph ids
    std::vector<TraceLevel>& trace;
    bool exceeded = false;
};

SubBlowup restrict_to(const SubBlowup& sub, const std::vector<int>& fibers) {
    auto is = induced_subgraph(sub.skeleton, std::span<const int>(fibers));
    SubBlowup out;
    out.skeleton = std::move(is.graph);
    for (int f : is.old_ids) {
        out.mult.push_back(sub.mult[f]);
        out.global_ids.push_back(sub.global_ids[f]);
    }
    return out;
}

Graph materialize(const SubBlowup& sub, std::vector<int>& flat_ids) {
    std::vector<int> offset(sub.mult.size() + 1, 0);
    for (size_t v = 0; v < sub.mult.size(); ++v) offset[v + 1] = offset[v] + sub.mult[v];
    flat_ids.clear();
    for (const auto& ids : sub.global_ids) flat_ids.insert(flat_ids.end(), ids.begin(), ids.end());
    std::vector<std::pair<int, int>> edges;
    int s = sub.skeleton.vertex_count();
    for (int v = 0; v < s; ++v)
        for (int i = offset[v]; i < offset[v + 1]; ++i)
            for (int j = i + 1; j < offset[v + 1]; ++j) edges.emplace_back(i, j);
    for (auto [u, v] : sub.skeleton.edges())
        for (int i = offset[u]; i < offset[u + 1]; ++i)
            for (int j = offset[v]; j < offset[v + 1]; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(offset[s], edges);
}

BlowupMap as_map(const SubBlowup& sub) {
    std::vector<int> assignment;
    for (size_t v = 0; v < sub.mult.size(); ++v)
        assignment.insert(assignment.end(), sub.mult[v], int(v));
    return BlowupMap{sub.skeleton, sub.mult, std::move(assignment)};
}

int color_sub(EngineState& st, const SubBlowup& sub);

// Connected skeleton, all multiplicities >= 1. Returns the palette consumed.
int color_component(EngineState& st, const SubBlowup& sub) {
    BlowupMap bmap = as_map(sub);
    int omega = blowup_omega(bmap);
    int bound = compute_bound(st.params, omega);

    if (Rational(omega) <= st.threshold) {
        std::vector<int> flat_ids;
        Graph g = materialize(sub, flat_ids);
        OracleResult res = st.base(g, bound);
        for (int i = 0; i < g.vertex_count(); ++i) st.coloring[flat_ids[i]] = res.witness[i];
        if (res.value > bound) st.exceeded = true;
        st.trace.push_back({omega, 0, 0, 0, 0, res.value, true});
        return res.value;
    }

    if (sub.skeleton.vertex_count() == 1) {
        // A lone fiber is a clique, chi = omega <= bound outright. The
        // partition claims assume at least two fibers, so it never recurses.
        for (int i = 0; i < sub.mult[0]; ++i) st.coloring[sub.global_ids[0][i]] = i + 1;
        st.trace.push_back({omega, 0, 0, 0, 0, omega, true});
        return omega;
    }

    int q = st.params.q;
    TransversalPartition part = partition_v1_v2(bmap, st.params, omega);
    int budget_rec = compute_bound(st.params, omega - 2 * q);
    if (omega - 1 - q > budget_rec)
        throw std::logic_error(
            "transversal partition violates: omega-1-q <= ceil(p(omega-2q)/2q)");

    // Which fibers sit in V1, and which survive into V2 \ T.
    int s = sub.skeleton.vertex_count();
    std::vector<bool> fiber_in_v1(s, false);
    for (int i : part.v1) fiber_in_v1[bmap.assignment[i]] = true;
    std::vector<int> v2_fibers;
    for (int v = 0; v < s; ++v)
        if (!fiber_in_v1[v] && sub.mult[v] > q) v2_fibers.push_back(v);

    SubBlowup rec = restrict_to(sub, v2_fibers);
    for (auto& ids : rec.global_ids) ids.erase(ids.begin(), ids.begin() + q);
    for (auto& m : rec.mult) m -= q;
    int used_rec = color_sub(st, rec);

    // V1 cliques share the recursion's palette.
    std::vector<int> offsets(s + 1, 0);
    for (int v = 0; v < s; ++v) offsets[v + 1] = offsets[v] + sub.mult[v];
    auto to_global = [&](int local) {
        int v = bmap.assignment[local];
        return sub.global_ids[v][local - offsets[v]];
    };
    for (const auto& k : part.v1_cliques) {
        int c = 0;
        for (int local : k) st.coloring[to_global(local)] = ++c;
    }

    // T gets fresh colors above everything the recursion consumed.
    SubBlowup tsub = sub;
    for (int v = 0; v < s; ++v) {
        tsub.mult[v] = std::min(q, sub.mult[v]);
        tsub.global_ids[v].resize(tsub.mult[v]);
    }
    std::vector<int> flat_ids;
    Graph tg = materialize(tsub, flat_ids);
    OracleResult tres = st.base(tg, st.params.p);
    if (tres.value > st.params.p) st.exceeded = true;
    int offset = std::max(budget_rec, used_rec);
    for (int i = 0; i < tg.vertex_count(); ++i)
        st.coloring[flat_ids[i]] = offset + tres.witness[i];

    st.trace.push_back({omega, int(part.t_set.size()), int(part.v1.size()),
                        int(part.v2.size()), budget_rec, tres.value, true});
    return offset + tres.value;
}

int color_sub(EngineState& st, const SubBlowup& sub) {
    std::vector<int> support;
    for (size_t v = 0; v < sub.mult.size(); ++v)
        if (sub.mult[v] > 0) support.push_back(int(v));
    if (support.empty()) return 0;
    SubBlowup alive = restrict_to(sub, support);

    int used = 0;
    for (const auto& comp : connected_components(alive.skeleton))
        used = std::max(used, color_component(st, restrict_to(alive, comp)));
    return used;
}

} // namespace

Certificate color_blowup(const BlowupMap& b, const BoundParams& params, const BaseColorer& base) {
    Certificate cert;
    cert.params = params;
    cert.omega = blowup_omega(b);
    cert.bound = compute_bound(params, cert.omega);
    cert.coloring.assign(b.total_vertices(), 0);

    SubBlowup top;
    top.skeleton = b.skeleton;
    top.mult = b.multiplicity;
    top.global_ids.resize(b.skeleton.vertex_count());
    for (int i = 0; i < b.total_vertices(); ++i) top.global_ids[b.assignment[i]].push_back(i);

    EngineState st{params, base, base_threshold(params), cert.coloring, cert.trace};
    int used = color_sub(st, top);

    cert.base_bound_exceeded = st.exceeded;
    cert.palette_size = st.exceeded ? used : cert.bound;
    std::set<int> distinct(cert.coloring.begin(), cert.coloring.end());
    distinct.erase(0);
    cert.colors_used = int(distinct.size());
    return cert;
}

std::string certificate_to_json(const Certificate& c) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& l : c.trace)
        trace.push_back({{"omega", l.omega},
                         {"t_size", l.t_size},
                         {"v1_size", l.v1_size},
                         {"v2_size", l.v2_size},
                         {"recursive_budget", l.recursive_budget},
                         {"fresh_colors", l.fresh_colors},
                         {"checks_passed", l.checks_passed}});
    nlohmann::json j{{"colors", c.coloring},
                     {"palette", c.palette_size},
                     {"used", c.colors_used},
                     {"omega", c.omega},
                     {"p", c.params.p},
                     {"q", c.params.q},
                     {"bound", c.bound},
                     {"base_bound_exceeded", c.base_bound_exceeded},
                     {"trace", std::move(trace)}};
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate json: ") + e.what());
    }
    Certificate c;
    c.coloring = j.at("colors").get<std::vector<int>>();
    c.palette_size = j.at("palette").get<int>();
    c.colors_used = j.at("used").get<int>();
    c.omega = j.at("omega").get<int>();
    c.params = BoundParams(j.at("p").get<int>(), j.at("q").get<int>());
    c.bound = j.at("bound").get<int>();
    c.base_bound_exceeded = j.value("base_bound_exceeded", false);
    for (const auto& lj : j.value("trace", nlohmann::json::array())) {
        TraceLevel l;
        l.omega = lj.at("omega").get<int>();
        l.t_size = lj.at("t_size").get<int>();
        l.v1_size = lj.at("v1_size").get<int>();
        l.v2_size = lj.at("v2_size").get<int>();
        l.recursive_budget = lj.at("recursive_budget").get<int>();
        l.fresh_colors = lj.at("fresh_colors").get<int>();
        l.checks_passed = lj.at("checks_passed").get<bool>();
        c.trace.push_back(l);
    }
    return c;
}

// --------------------------------------------------------------------------
// Path blowups

int PathBlowup::omega() const {
    int best = 0;
    for (size_t i = 0; i + 1 < multiplicity.size(); ++i)
        best = std::max(best, multiplicity[i] + multiplicity[i + 1]);
    return best;
}

void PathBlowup::validate() const {
    int len = n();
    if (len < 3 || len % 2 == 0)
        throw std::invalid_argument("path blowup needs odd n >= 3");
    for (int m : multiplicity)
        if (m < 1) throw std::invalid_argument("path blowup cliques must be nonempty");
    if (r < omega()) throw std::invalid_argument("palette bound r below omega");
}

namespace {

void check_clique_colors(const std::vector<int>& colors, int r, size_t expect,
                         const std::string& what) {
    if (colors.size() != expect)
        throw std::invalid_argument(what + ": wrong number of colors");
    std::set<int> uniq(colors.begin(), colors.end());
    if (uniq.size() != colors.size())
        throw std::invalid_argument(what + ": repeated color inside a clique");
    for (int c : colors)
        if (c < 1 || c > r) throw std::invalid_argument(what + ": color outside 1..r");
}

// Fills position i of `coloring`, preferring colors used two positions back in
// sweep direction (anchor), then lowest id. Returns false when short.
bool fill_position(const PathBlowup& pb, PathColoring& coloring, int i, int anchor,
                   const std::set<int>& banned) {
    std::set<int> forbidden(banned);
    for (int c : coloring[i]) forbidden.insert(c);
    if (i > 0)
        for (int c : coloring[i - 1]) forbidden.insert(c);
    if (i < pb.n())
        for (int c : coloring[i + 1]) forbidden.insert(c);

    std::set<int> preferred;
    if (anchor >= 0 && anchor <= pb.n())
        preferred.insert(coloring[anchor].begin(), coloring[anchor].end());

    std::vector<int> picks;
    for (int pass = 0; pass < 2 && int(coloring[i].size() + picks.size()) < pb.multiplicity[i];
         ++pass)
        for (int c = 1; c <= pb.r; ++c) {
            if (int(coloring[i].size() + picks.size()) >= pb.multiplicity[i]) break;
            if (forbidden.count(c)) continue;
            if ((pass == 0) != (preferred.count(c) > 0)) continue;
            picks.push_back(c);
            forbidden.insert(c);
        }
    if (int(coloring[i].size() + picks.size()) < pb.multiplicity[i]) return false;
    coloring[i].insert(coloring[i].end(), picks.begin(), picks.end());
    return true;
}

void verify_path_coloring(const PathBlowup& pb, const PathColoring& coloring, int skip,
                          const std::string& what) {
    for (int i = 0; i <= pb.n(); ++i) {
        if (i == skip) continue;
        if (int(coloring[i].size()) != pb.multiplicity[i])
            throw std::logic_error(what + ": clique " + std::to_string(i) + " not fully colored");
        std::set<int> own(coloring[i].begin(), coloring[i].end());
        if (int(own.size()) != pb.multiplicity[i])
            throw std::logic_error(what + ": repeated color in clique " + std::to_string(i));
        for (int c : own)
            if (c < 1 || c > pb.r) throw std::logic_error(what + ": color outside palette");
        if (i + 1 <= pb.n() && i + 1 != skip)
            for (int c : coloring[i + 1])
                if (own.count(c))
                    throw std::logic_error(what + ": adjacent cliques " + std::to_string(i) +
                                           "," + std::to_string(i + 1) + " share color " +
                                           std::to_string(c));
    }
}

} // namespace

PathColoring path_extension(const PathBlowup& pb, const std::vector<int>& v0_colors,
                            const std::vector<int>& vn_colors, const std::vector<int>& s,
                            int j) {
    pb.validate();
    int n = pb.n();
    check_clique_colors(v0_colors, pb.r, size_t(pb.multiplicity[0]), "path extension: V0");
    check_clique_colors(vn_colors, pb.r, size_t(pb.multiplicity[n]), "path extension: Vn");
    if (j < 1 || j > n - 1 || j % 2 == 0)
        throw std::invalid_argument("path extension: j must be odd in 1..n-1");

    std::set<int> v0(v0_colors.begin(), v0_colors.end()), vn(vn_colors.begin(), vn_colors.end());
    std::set<int> s_set(s.begin(), s.end());
    if (s_set.size() != s.size()) throw std::invalid_argument("path extension: s has repeats");
    for (int c : s)
        if (!v0.count(c) || vn.count(c))
            throw std::invalid_argument("path extension: s must sit in colors(V0) minus colors(Vn)");
    int min_even = pb.multiplicity[0];
    for (int i = 0; i <= n; i += 2) min_even = std::min(min_even, pb.multiplicity[i]);
    if (int(s.size()) > min_even)
        throw std::invalid_argument("path extension: |s| exceeds the smallest even clique");

    PathColoring coloring(n + 1);
    coloring[0] = v0_colors;
    coloring[n] = vn_colors;
    // Reserved colors first: every even clique carries all of s.
    for (int i = 2; i < n; i += 2) coloring[i] = s;
    // Left sweep toward the gap, then right sweep toward it.
    for (int i = 1; i < j; ++i)
        if (!fill_position(pb, coloring, i, i - 2, {}))
            throw std::logic_error("path extension: stuck at position " + std::to_string(i));
    for (int i = n - 1; i > j; --i)
        if (!fill_position(pb, coloring, i, i + 2, {}))
            throw std::logic_error("path extension: stuck at position " + std::to_string(i));

    verify_path_coloring(pb, coloring, j, "path extension");
    for (int i = 0; i <= n; i += 2) {
        std::set<int> own(coloring[i].begin(), coloring[i].end());
        for (int c : s)
            if (!own.count(c))
                throw std::logic_error("path extension: reserved color missing on even clique " +
                                       std::to_string(i));
    }
    return coloring;
}

ChainResult greedy_chain_extension(const PathBlowup& pb, const PathColoring& partial,
                                   const std::vector<int>& reserved,
                                   const std::vector<int>& order) {
    pb.validate();
    int n = pb.n();
    if (int(partial.size()) != n + 1)
        throw std::invalid_argument("greedy chain: partial coloring must cover every position");
    for (int i = 0; i <= n; ++i) {
        if (int(partial[i].size()) > pb.multiplicity[i])
            throw std::invalid_argument("greedy chain: too many colors at position " +
                                        std::to_string(i));
        std::set<int> own(partial[i].begin(), partial[i].end());
        if (own.size() != partial[i].size())
            throw std::invalid_argument("greedy chain: repeated color at position " +
                                        std::to_string(i));
        for (int c : partial[i])
            if (c < 1 || c > pb.r)
                throw std::invalid_argument("greedy chain: color outside palette");
        if (i < n)
            for (int c : partial[i + 1])
                if (own.count(c))
                    throw std::invalid_argument("greedy chain: pre-coloring is improper");
    }
    std::set<int> seen_pos;
    for (int i : order) {
        if (i < 0 || i > n) throw std::invalid_argument("greedy chain: order position out of range");
        if (!seen_pos.insert(i).second)
            throw std::invalid_argument("greedy chain: repeated order position");
    }

    int dir = order.size() >= 2 && order[1] < order[0] ? -1 : 1;
    std::set<int> banned(reserved.begin(), reserved.end());

    ChainResult res;
    res.coloring = partial;
    for (int i : order)
        if (!fill_position(pb, res.coloring, i, i - 2 * dir, banned)) {
            res.success = false;
            res.stuck_position = i;
            return res;
        }
    for (int i = 0; i <= n; ++i)
        if (int(res.coloring[i].size()) != pb.multiplicity[i] && seen_pos.count(i))
            throw std::logic_error("greedy chain: swept clique left unfilled");
    res.success = true;
    return res;
}

} // namespace capev
