#include "ecsearch/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace ecsearch {

namespace {

std::string pair_text(VertexId a, VertexId b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

MixedGraph::MixedGraph(int vertex_count)
    : n_(vertex_count), parents_(vertex_count), children_(vertex_count), lines_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void MixedGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

void MixedGraph::check_pair(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
}

int MixedGraph::edge_count() const {
    int lines = 0;
    for (const auto& s : lines_) lines += static_cast<int>(s.size());
    lines /= 2;
    int arrows = 0;
    for (const auto& s : children_) arrows += static_cast<int>(s.size());
    return lines + arrows;
}

bool MixedGraph::line(VertexId a, VertexId b) const {
    check_pair(a, b);
    return lines_[a].count(b) > 0;
}

bool MixedGraph::arrow(VertexId a, VertexId b) const {
    check_pair(a, b);
    return children_[a].count(b) > 0;
}

bool MixedGraph::adjacent(VertexId a, VertexId b) const {
    check_pair(a, b);
    return lines_[a].count(b) > 0 || children_[a].count(b) > 0 || parents_[a].count(b) > 0;
}

const std::set<VertexId>& MixedGraph::parents(VertexId v) const {
    check_vertex(v);
    return parents_[v];
}

const std::set<VertexId>& MixedGraph::children(VertexId v) const {
    check_vertex(v);
    return children_[v];
}

const std::set<VertexId>& MixedGraph::line_neighbours(VertexId v) const {
    check_vertex(v);
    return lines_[v];
}

std::set<VertexId> MixedGraph::adjacent_vertices(VertexId v) const {
    check_vertex(v);
    std::set<VertexId> out = lines_[v];
    out.insert(parents_[v].begin(), parents_[v].end());
    out.insert(children_[v].begin(), children_[v].end());
    return out;
}

void MixedGraph::add_arrow(VertexId a, VertexId b) {
    check_pair(a, b);
    if (adjacent(a, b)) throw std::invalid_argument("edge already present at " + pair_text(a, b));
    edges_.insert({a, b});
    children_[a].insert(b);
    parents_[b].insert(a);
}

void MixedGraph::add_line(VertexId a, VertexId b) {
    check_pair(a, b);
    if (adjacent(a, b)) throw std::invalid_argument("edge already present at " + pair_text(a, b));
    edges_.insert({a, b});
    edges_.insert({b, a});
    lines_[a].insert(b);
    lines_[b].insert(a);
}

void MixedGraph::remove_edge(VertexId a, VertexId b) {
    check_pair(a, b);
    if (!adjacent(a, b)) throw std::invalid_argument("no edge at " + pair_text(a, b));
    edges_.erase({a, b});
    edges_.erase({b, a});
    lines_[a].erase(b);
    lines_[b].erase(a);
    children_[a].erase(b);
    children_[b].erase(a);
    parents_[a].erase(b);
    parents_[b].erase(a);
}

void MixedGraph::orient(VertexId a, VertexId b) {
    if (!line(a, b)) throw std::invalid_argument("no line at " + pair_text(a, b));
    remove_edge(a, b);
    add_arrow(a, b);
}

void MixedGraph::undirect(VertexId a, VertexId b) {
    if (!arrow(a, b)) throw std::invalid_argument("no arrow at " + pair_text(a, b));
    remove_edge(a, b);
    add_line(a, b);
}

bool MixedGraph::has_arrows() const {
    for (const auto& s : children_)
        if (!s.empty()) return true;
    return false;
}

bool MixedGraph::has_lines() const {
    for (const auto& s : lines_)
        if (!s.empty()) return true;
    return false;
}

VStructure::VStructure(VertexId h, VertexId t1, VertexId t2)
    : head(h), tail1(std::min(t1, t2)), tail2(std::max(t1, t2)) {
    if (t1 == t2 || t1 == h || t2 == h) throw std::invalid_argument("degenerate v-structure");
}

MixedGraph skeleton(const MixedGraph& g) {
    MixedGraph s(g.vertex_count());
    for (const auto& [a, b] : g.edges())
        if (!s.adjacent(a, b)) s.add_line(a, b);
    return s;
}

std::set<VStructure> v_structures(const MixedGraph& g) {
    std::set<VStructure> out;
    for (VertexId h = 0; h < g.vertex_count(); ++h) {
        const auto& pa = g.parents(h);
        for (auto it1 = pa.begin(); it1 != pa.end(); ++it1)
            for (auto it2 = std::next(it1); it2 != pa.end(); ++it2)
                if (!g.adjacent(*it1, *it2)) out.insert(VStructure(h, *it1, *it2));
    }
    return out;
}

std::vector<std::vector<VertexId>> chain_components(const MixedGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (VertexId w : g.line_neighbours(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<VertexId> chain_component_of(const MixedGraph& g, VertexId v) {
    for (auto& comp : chain_components(g))
        if (std::binary_search(comp.begin(), comp.end(), v)) return comp;
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

bool is_chain_graph(const MixedGraph& g) {
    // Collapse chain components and topologically sort the quotient. An arrow
    // inside a component, or a cycle among components, is a directed cycle.
    const int n = g.vertex_count();
    std::vector<int> comp_of(n, -1);
    auto comps = chain_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);

    const int m = static_cast<int>(comps.size());
    std::vector<std::set<int>> succ(m);
    std::vector<int> indegree(m, 0);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b : g.children(a)) {
            if (comp_of[a] == comp_of[b]) return false;
            if (succ[comp_of[a]].insert(comp_of[b]).second) ++indegree[comp_of[b]];
        }

    std::queue<int> ready;
    for (int c = 0; c < m; ++c)
        if (indegree[c] == 0) ready.push(c);
    int emitted = 0;
    while (!ready.empty()) {
        int c = ready.front();
        ready.pop();
        ++emitted;
        for (int d : succ[c])
            if (--indegree[d] == 0) ready.push(d);
    }
    return emitted == m;
}

bool is_undirected(const MixedGraph& g) { return !g.has_arrows(); }

bool is_dag(const MixedGraph& g) { return !g.has_lines() && is_chain_graph(g); }

bool is_protected(const MixedGraph& g, VertexId a, VertexId b) {
    if (!g.arrow(a, b)) throw std::invalid_argument("no arrow at " + pair_text(a, b));
    std::set<VertexId> pb = g.parents(b);
    pb.erase(a);
    return g.parents(a) != pb;
}

bool is_strongly_protected(const MixedGraph& g, VertexId a, VertexId b) {
    if (!g.arrow(a, b)) throw std::invalid_argument("no arrow at " + pair_text(a, b));
    for (VertexId c : g.parents(a))
        if (c != b && !g.adjacent(c, b)) return true;  // (a)
    for (VertexId c : g.parents(b))
        if (c != a && !g.adjacent(c, a)) return true;  // (b)
    for (VertexId c : g.children(a))
        if (c != b && g.arrow(c, b)) return true;  // (c)
    // (d): two line-neighbours of a, non-adjacent, both arrowing into b
    std::vector<VertexId> into_b;
    for (VertexId c : g.line_neighbours(a))
        if (c != b && g.arrow(c, b)) into_b.push_back(c);
    for (std::size_t i = 0; i < into_b.size(); ++i)
        for (std::size_t j = i + 1; j < into_b.size(); ++j)
            if (!g.adjacent(into_b[i], into_b[j])) return true;
    return false;
}

MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<VertexId>& vs) {
    std::set<VertexId> keep;
    for (VertexId v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("unknown vertex " + std::to_string(v));
        keep.insert(v);
    }
    MixedGraph sub(g.vertex_count());
    for (const auto& [x, y] : g.edges()) {
        if (!keep.count(x) || !keep.count(y) || sub.adjacent(x, y)) continue;
        if (g.line(x, y))
            sub.add_line(x, y);
        else
            sub.add_arrow(x, y);
    }
    return sub;
}

namespace {

template <typename Container>
bool complete_impl(const MixedGraph& g, const Container& vs) {
    for (auto it1 = vs.begin(); it1 != vs.end(); ++it1)
        for (auto it2 = std::next(it1); it2 != vs.end(); ++it2)
            if (*it1 != *it2 && !g.adjacent(*it1, *it2)) return false;
    return true;
}

}  // namespace

bool is_complete_in(const MixedGraph& g, const std::vector<VertexId>& vs) {
    return complete_impl(g, vs);
}

bool is_complete_in(const MixedGraph& g, const std::set<VertexId>& vs) {
    return complete_impl(g, vs);
}

}  // namespace ecsearch
