#pragma once

#include "capev/graph.hpp"

#include <iosfwd>
#include <string>

namespace capev {

/// Thrown on malformed graph files; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// DIMACS ".col" edge format: "p edge n m" header, "e u v" lines (1-based),
/// "c" comments. The writer emits edges with u < v in ascending order, so
/// write/read round-trips are bit-exact.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g);

/// JSON adjacency form (0-based): {"n": int, "adj": [[neighbors...] x n]}
/// with each neighbor list sorted ascending.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

} // namespace capev
