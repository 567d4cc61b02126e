#include "ecsearch/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ecsearch {

VertexId NamedGraph::id_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<VertexId>(i);
    throw std::invalid_argument("unknown vertex name '" + name + "'");
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

NamedGraph parse_graph(std::istream& in) {
    std::vector<std::string> names;
    std::map<std::string, VertexId> ids;
    bool have_header = false;
    MixedGraph g;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!have_header) {
            if (toks[0] != "vertices:")
                throw std::invalid_argument(where + "expected 'vertices:' header");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (ids.count(toks[i]))
                    throw std::invalid_argument(where + "duplicate vertex '" + toks[i] + "'");
                ids[toks[i]] = static_cast<VertexId>(names.size());
                names.push_back(toks[i]);
            }
            g = MixedGraph(static_cast<int>(names.size()));
            have_header = true;
            continue;
        }
        if (toks.size() != 3 || (toks[1] != "->" && toks[1] != "--"))
            throw std::invalid_argument(where + "expected 'a -> b' or 'a -- b'");
        auto a_it = ids.find(toks[0]);
        auto b_it = ids.find(toks[2]);
        if (a_it == ids.end()) throw std::invalid_argument(where + "unknown vertex '" + toks[0] + "'");
        if (b_it == ids.end()) throw std::invalid_argument(where + "unknown vertex '" + toks[2] + "'");
        VertexId a = a_it->second, b = b_it->second;
        if (a == b) throw std::invalid_argument(where + "self-loop at '" + toks[0] + "'");
        if (g.adjacent(a, b))
            throw std::invalid_argument(where + "duplicate edge between '" + toks[0] + "' and '" +
                                        toks[2] + "'");
        if (toks[1] == "->")
            g.add_arrow(a, b);
        else
            g.add_line(a, b);
    }
    if (!have_header) throw std::invalid_argument("missing 'vertices:' header");
    return NamedGraph{std::move(names), std::move(g)};
}

NamedGraph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

NamedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

std::string print_graph(const MixedGraph& g, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != g.vertex_count())
        throw std::invalid_argument("name table does not match vertex count");
    std::ostringstream out;
    out << "vertices:";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
            if (g.line(a, b))
                out << names[a] << " -- " << names[b] << '\n';
            else if (g.arrow(a, b))
                out << names[a] << " -> " << names[b] << '\n';
            else if (g.arrow(b, a))
                out << names[b] << " -> " << names[a] << '\n';
        }
    return out.str();
}

std::string print_graph(const NamedGraph& g) { return print_graph(g.graph, g.names); }

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

}  // namespace ecsearch
