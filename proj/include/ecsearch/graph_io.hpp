#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ecsearch/graph.hpp"

namespace ecsearch {

/// Graph plus its vertex name table. Names exist only at the I/O boundary;
/// algorithms work on integer ids.
struct NamedGraph {
    std::vector<std::string> names;
    MixedGraph graph;

    VertexId id_of(const std::string& name) const;  // throws on unknown name
};

/// Text format:
///   # comment (anywhere, to end of line)
///   vertices: a b c
///   a -> b
///   b -- c
/// Duplicate or conflicting edge declarations are rejected.
NamedGraph parse_graph(std::istream& in);
NamedGraph parse_graph(const std::string& text);
NamedGraph load_graph_file(const std::string& path);

/// Canonical form: declared vertex order, then edges sorted by ordered
/// endpoint ids (lines written once, smaller endpoint first).
std::string print_graph(const NamedGraph& g);
std::string print_graph(const MixedGraph& g, const std::vector<std::string>& names);

/// Names v0, v1, ... for graphs that never cross the I/O boundary.
std::vector<std::string> default_names(int n);

}  // namespace ecsearch
