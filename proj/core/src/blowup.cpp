#include "capev/blowup.hpp"

#include "capev/graph_io.hpp"
#include "capev/oracles.hpp"
#include "capev/structure.hpp"

#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace capev {

std::vector<int> BlowupMap::fiber(int v) const {
    std::vector<int> out;
    for (int i = 0; i < total_vertices(); ++i)
        if (assignment[i] == v) out.push_back(i);
    return out;
}

BlowupResult build_blowup(const Graph& skeleton, const std::vector<int>& multiplicity) {
    int s = skeleton.vertex_count();
    if (int(multiplicity.size()) != s)
        throw std::invalid_argument("multiplicity must cover every skeleton vertex");
    for (int m : multiplicity)
        if (m < 0) throw std::invalid_argument("negative multiplicity");

    std::vector<int> offset(s + 1, 0);
    for (int v = 0; v < s; ++v) offset[v + 1] = offset[v] + multiplicity[v];
    int n = offset[s];

    std::vector<int> assignment(n);
    for (int v = 0; v < s; ++v)
        for (int i = offset[v]; i < offset[v + 1]; ++i) assignment[i] = v;

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < s; ++v)
        for (int i = offset[v]; i < offset[v + 1]; ++i)
            for (int j = i + 1; j < offset[v + 1]; ++j) edges.emplace_back(i, j);
    for (auto [u, v] : skeleton.edges())
        for (int i = offset[u]; i < offset[u + 1]; ++i)
            for (int j = offset[v]; j < offset[v + 1]; ++j) edges.emplace_back(i, j);

    BlowupResult r;
    r.graph = Graph::from_edges(n, edges);
    r.map = BlowupMap{skeleton, multiplicity, std::move(assignment)};
    return r;
}

BlowupMap recognize_blowup(const Graph& g) {
    auto classes = true_twin_classes(g);
    int s = int(classes.size());
    std::vector<int> assignment(g.vertex_count());
    std::vector<int> multiplicity(s);
    for (int c = 0; c < s; ++c) {
        multiplicity[c] = int(classes[c].size());
        for (int v : classes[c]) assignment[v] = c;
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            if (g.adjacent(classes[a][0], classes[b][0])) edges.emplace_back(a, b);
    return BlowupMap{Graph::from_edges(s, edges), std::move(multiplicity), std::move(assignment)};
}

BlowupResult cycle_blowup(int len, const std::vector<int>& multiplicity) {
    if (len < 5 || len % 2 == 0)
        throw std::invalid_argument("cycle blowup needs an odd cycle length >= 5");
    return build_blowup(cycle_graph(len), multiplicity);
}

BlowupResult cycle_blowup(int len, int uniform_k) {
    if (len < 5 || len % 2 == 0)
        throw std::invalid_argument("cycle blowup needs an odd cycle length >= 5");
    return build_blowup(cycle_graph(len), std::vector<int>(len, uniform_k));
}

int blowup_omega(const BlowupMap& b) {
    if (find_triangle(b.skeleton)) {
        // Non-triangle-free skeleton: maximal cliques are no longer confined
        // to edge pairs, delegate to the exact oracle.
        return max_clique_size(build_blowup(b.skeleton, b.multiplicity).graph).value;
    }
    int best = 0;
    for (auto [u, v] : b.skeleton.edges())
        best = std::max(best, b.multiplicity[u] + b.multiplicity[v]);
    for (int v = 0; v < b.skeleton.vertex_count(); ++v) {
        if (b.multiplicity[v] == 0) continue;
        bool lone = true;
        const VertexSet& nb = b.skeleton.neighbors(v);
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (b.multiplicity[w] > 0) {
                lone = false;
                break;
            }
        if (lone) best = std::max(best, b.multiplicity[v]);
    }
    return best;
}

void validate_blowup(const Graph& g, const BlowupMap& map) {
    int n = g.vertex_count();
    if (map.total_vertices() != n)
        throw std::invalid_argument("blowup map: assignment size differs from graph order");
    long total = std::accumulate(map.multiplicity.begin(), map.multiplicity.end(), 0L);
    if (total != n)
        throw std::invalid_argument("blowup map: multiplicities do not sum to graph order");
    int s = map.skeleton.vertex_count();
    if (int(map.multiplicity.size()) != s)
        throw std::invalid_argument("blowup map: multiplicity size differs from skeleton order");
    std::vector<int> count(s, 0);
    for (int i = 0; i < n; ++i) {
        int v = map.assignment[i];
        if (v < 0 || v >= s) throw std::invalid_argument("blowup map: assignment out of range");
        ++count[v];
    }
    if (count != map.multiplicity)
        throw std::invalid_argument("blowup map: fiber sizes disagree with multiplicities");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int u = map.assignment[i], v = map.assignment[j];
            bool want = (u == v) || map.skeleton.adjacent(u, v);
            if (g.adjacent(i, j) != want)
                throw std::invalid_argument("blowup map: fiber adjacency pattern violated");
        }
}

std::string blowup_to_json(const BlowupMap& b) {
    nlohmann::json j;
    j["skeleton"] = nlohmann::json::parse(graph_to_json(b.skeleton));
    j["multiplicity"] = b.multiplicity;
    j["assignment"] = b.assignment;
    return j.dump();
}

BlowupMap blowup_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("blowup json: ") + e.what());
    }
    if (!j.contains("skeleton") || !j.contains("multiplicity") || !j.contains("assignment"))
        throw ParseError("blowup json: expected skeleton, multiplicity, assignment");
    BlowupMap b;
    b.skeleton = graph_from_json(j.at("skeleton").dump());
    b.multiplicity = j.at("multiplicity").get<std::vector<int>>();
    b.assignment = j.at("assignment").get<std::vector<int>>();
    return b;
}

} // namespace capev
