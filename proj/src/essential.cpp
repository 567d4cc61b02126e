#include "ecsearch/essential.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ecsearch/chordal.hpp"

namespace ecsearch {

namespace {

std::string arrow_text(VertexId a, VertexId b) {
    return std::to_string(a) + " -> " + std::to_string(b);
}

std::string set_text(const std::vector<VertexId>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

}  // namespace

ValidationReport validate_essential(const MixedGraph& g) {
    if (!is_chain_graph(g))
        return {false, EssentialViolation::not_chain_graph, "graph contains a directed cycle"};

    for (const auto& comp : chain_components(g)) {
        if (comp.size() < 4) continue;
        if (!is_chordal(induced_subgraph(g, comp)))
            return {false, EssentialViolation::component_not_chordal,
                    "chain component " + set_text(comp) + " is not chordal"};
    }

    for (VertexId b = 0; b < g.vertex_count(); ++b)
        for (VertexId a : g.parents(b))
            for (VertexId c : g.line_neighbours(b))
                if (c != a && !g.adjacent(a, c))
                    return {false, EssentialViolation::induced_arrow_line,
                            "induced " + arrow_text(a, b) + " -- " + std::to_string(c)};

    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b : g.children(a))
            if (!is_strongly_protected(g, a, b))
                return {false, EssentialViolation::arrow_not_strongly_protected,
                        "arrow " + arrow_text(a, b) + " is not strongly protected"};

    return {true, EssentialViolation::none, ""};
}

EssentialGraph::EssentialGraph(MixedGraph g) : graph_(std::move(g)) {
    auto report = validate_essential(graph_);
    if (!report.ok)
        throw std::invalid_argument("not an essential graph: " + report.witness);
}

EssentialGraph essentialize(const MixedGraph& g0) {
    MixedGraph g = g0;
    for (;;) {
        std::vector<std::pair<VertexId, VertexId>> unprotected;
        for (VertexId a = 0; a < g.vertex_count(); ++a)
            for (VertexId b : g.children(a))
                if (!is_strongly_protected(g, a, b)) unprotected.push_back({a, b});
        if (unprotected.empty()) break;
        for (auto [a, b] : unprotected) g.undirect(a, b);
    }
    try {
        return EssentialGraph(std::move(g));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("essentialize: fixpoint failed validation "
                                                "(input precondition breach): ") +
                                    e.what());
    }
}

bool same_class(const MixedGraph& d1, const MixedGraph& d2) {
    if (!is_dag(d1) || !is_dag(d2)) throw std::invalid_argument("same_class: inputs must be DAGs");
    if (d1.vertex_count() != d2.vertex_count())
        throw std::invalid_argument("same_class: vertex counts differ");
    return skeleton(d1) == skeleton(d2) && v_structures(d1) == v_structures(d2);
}

std::optional<MixedGraph> consistent_extension(const MixedGraph& g) {
    const int n = g.vertex_count();
    MixedGraph work = g;
    MixedGraph result(n);
    for (const auto& [a, b] : g.edges())
        if (!g.line(a, b)) result.add_arrow(a, b);

    std::vector<bool> alive(n, true);
    for (int peeled = 0; peeled < n; ++peeled) {
        VertexId x = -1;
        for (VertexId v = 0; v < n && x == -1; ++v) {
            if (!alive[v]) continue;
            if (!work.children(v).empty()) continue;  // must be a sink
            // every line-neighbour must see all other adjacent vertices
            bool ok = true;
            auto adj = work.adjacent_vertices(v);
            for (VertexId y : work.line_neighbours(v)) {
                for (VertexId z : adj)
                    if (z != y && !work.adjacent(y, z)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) x = v;
        }
        if (x == -1) return std::nullopt;
        for (VertexId y : std::set<VertexId>(work.line_neighbours(x))) {
            work.remove_edge(y, x);
            result.add_arrow(y, x);
        }
        for (VertexId y : std::set<VertexId>(work.parents(x))) work.remove_edge(y, x);
        alive[x] = false;
    }
    return result;
}

namespace {

// All collider-free orientations of the lines inside one chain component of a
// validated essential graph. Orientations induced by permutations of the
// component, deduplicated. Arrows pointing into the component never collide
// with these orientations (the validated graph has no induced a -> b -- c).
std::vector<std::vector<std::pair<VertexId, VertexId>>> component_orientations(
    const MixedGraph& g, const std::vector<VertexId>& comp) {
    std::vector<std::pair<VertexId, VertexId>> comp_lines;
    for (VertexId a : comp)
        for (VertexId b : g.line_neighbours(a))
            if (a < b) comp_lines.push_back({a, b});

    std::vector<std::vector<std::pair<VertexId, VertexId>>> out;
    if (comp_lines.empty()) {
        out.push_back({});
        return out;
    }

    std::set<std::vector<std::pair<VertexId, VertexId>>> seen;
    std::vector<VertexId> perm = comp;  // comp is sorted, so this starts lexicographically
    std::map<VertexId, int> pos;
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
        std::vector<std::pair<VertexId, VertexId>> oriented;
        oriented.reserve(comp_lines.size());
        for (auto [a, b] : comp_lines)
            oriented.push_back(pos[a] < pos[b] ? std::make_pair(a, b) : std::make_pair(b, a));
        std::sort(oriented.begin(), oriented.end());
        if (!seen.insert(oriented).second) continue;
        // keep only collider-free orientations
        std::map<VertexId, std::vector<VertexId>> new_parents;
        for (auto [a, b] : oriented) new_parents[b].push_back(a);
        bool perfect = true;
        for (const auto& [h, ps] : new_parents) {
            for (std::size_t i = 0; i < ps.size() && perfect; ++i)
                for (std::size_t j = i + 1; j < ps.size() && perfect; ++j)
                    if (!g.adjacent(ps[i], ps[j])) perfect = false;
            if (!perfect) break;
        }
        if (perfect) out.push_back(std::move(oriented));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<MixedGraph> class_members(const EssentialGraph& e) {
    const MixedGraph& g = e.graph();
    auto comps = chain_components(g);
    std::vector<std::vector<std::vector<std::pair<VertexId, VertexId>>>> choices;
    for (const auto& comp : comps) choices.push_back(component_orientations(g, comp));

    MixedGraph base(g.vertex_count());
    for (const auto& [a, b] : g.edges())
        if (!g.line(a, b)) base.add_arrow(a, b);

    std::vector<MixedGraph> members;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        MixedGraph d = base;
        for (std::size_t c = 0; c < choices.size(); ++c)
            for (auto [a, b] : choices[c][pick[c]]) d.add_arrow(a, b);
        members.push_back(std::move(d));
        std::size_t c = 0;
        while (c < choices.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
        if (c == choices.size()) break;
    }
    return members;
}

EssentialGraph remove_line_fast(const EssentialGraph& e, VertexId a, VertexId b) {
    const MixedGraph& g = e.graph();
    if (!g.line(a, b)) throw std::invalid_argument("remove_line_fast: no line at the pair");
    for (VertexId h : g.line_neighbours(a))
        if (h != b && g.line(b, h))
            throw std::invalid_argument(
                "remove_line_fast: endpoints share the line-neighbour " + std::to_string(h));
    MixedGraph out = g;
    out.remove_edge(a, b);
    return EssentialGraph(std::move(out));
}

}  // namespace ecsearch
