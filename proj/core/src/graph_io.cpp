#include "capev/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace capev {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_edges = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            std::string fmt;
            long m;
            if (!(iss >> fmt >> n >> m) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw ParseError("dimacs: bad problem line at line " + std::to_string(lineno));
            if (n < 0) throw ParseError("dimacs: negative vertex count");
            declared_edges = m;
        } else if (tag == "e") {
            int u, v;
            if (!(iss >> u >> v))
                throw ParseError("dimacs: bad edge line at line " + std::to_string(lineno));
            if (n < 0) throw ParseError("dimacs: edge before problem line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("dimacs: endpoint out of range at line " + std::to_string(lineno));
            if (u == v)
                throw ParseError("dimacs: self-loop at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("dimacs: unknown line type '" + tag + "' at line " +
                             std::to_string(lineno));
        }
    }
    if (n < 0) throw ParseError("dimacs: missing problem line");
    Graph g = Graph::from_edges(n, edges);
    if (declared_edges >= 0 && g.edge_count() != declared_edges)
        throw ParseError("dimacs: header declares " + std::to_string(declared_edges) +
                         " edges but file has " + std::to_string(g.edge_count()));
    return g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_dimacs(out, g);
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("adj"))
        throw ParseError("graph json: expected object with \"n\" and \"adj\"");
    int n = j.at("n").get<int>();
    const auto& adj = j.at("adj");
    if (!adj.is_array() || int(adj.size()) != n)
        throw ParseError("graph json: adj must list every vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (const auto& wj : adj[u]) {
            int w = wj.get<int>();
            if (w < 0 || w >= n) throw ParseError("graph json: neighbor out of range");
            if (w == u) throw ParseError("graph json: self-loop");
            if (u < w) edges.emplace_back(u, w);
        }
    }
    Graph g = Graph::from_edges(n, edges);
    // Symmetry check: every listed arc must have its reverse.
    for (int u = 0; u < n; ++u)
        for (const auto& wj : adj[u])
            if (!g.adjacent(u, wj.get<int>()) && u != wj.get<int>())
                throw ParseError("graph json: asymmetric adjacency");
    for (int u = 0; u < n; ++u)
        if (int(adj[u].size()) != g.degree(u))
            throw ParseError("graph json: adjacency list not symmetric");
    return g;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto adj = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v).to_vector());
    j["adj"] = std::move(adj);
    return j.dump();
}

} // namespace capev
