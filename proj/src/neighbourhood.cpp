#include "ecsearch/neighbourhood.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "ecsearch/chordal.hpp"

namespace ecsearch {

namespace {

std::vector<VertexId> sorted_union(const std::set<VertexId>& base,
                                   const std::vector<VertexId>& extra,
                                   VertexId drop = -1) {
    std::set<VertexId> s(base);
    for (VertexId v : extra) s.insert(v);
    if (drop >= 0) s.erase(drop);
    return {s.begin(), s.end()};
}

/// Complete subsets of `heads` (including the empty set), lexicographic, by
/// recursive extension over common adjacent candidates so only complete sets
/// are visited. Returns true when the cap truncated the enumeration.
bool complete_subsets(const MixedGraph& g, const std::vector<VertexId>& heads, std::size_t cap,
                      std::vector<std::vector<VertexId>>& out) {
    out.clear();
    out.push_back({});
    bool truncated = false;
    // (prefix, candidates adjacent to every prefix member, all > prefix.back())
    std::vector<std::pair<std::vector<VertexId>, std::vector<VertexId>>> stack;
    stack.push_back({{}, heads});
    while (!stack.empty()) {
        auto [prefix, cands] = std::move(stack.back());
        stack.pop_back();
        // expand in reverse so the smallest candidate is processed first
        for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
            VertexId c = *it;
            std::vector<VertexId> next = prefix;
            next.push_back(c);
            std::vector<VertexId> next_cands;
            for (VertexId d : cands)
                if (d > c && g.adjacent(c, d)) next_cands.push_back(d);
            stack.push_back({std::move(next), std::move(next_cands)});
        }
        if (!prefix.empty()) {
            if (out.size() >= cap) {
                truncated = true;
                break;
            }
            out.push_back(std::move(prefix));
        }
    }
    return truncated;
}

std::set<VStructure> heads_to_vstructures(const std::vector<VertexId>& heads, VertexId a,
                                          VertexId b) {
    std::set<VStructure> out;
    for (VertexId h : heads) out.insert(VStructure(h, a, b));
    return out;
}

/// Result graph of a removal move: delete the edge at {a,b}, orient the lines
/// of the chain component holding the retained heads by an ordering that
/// starts with C (then a for line removals, then b), restore the lines inside
/// C, and reduce to the fixpoint.
EssentialGraph build_removal_result(const EssentialGraph& e, VertexId a, VertexId b,
                                    const std::vector<VertexId>& c_set, PairOpKind kind) {
    const MixedGraph& g = e.graph();

    if (kind == PairOpKind::remove_line) {
        bool w_empty = true;
        for (VertexId h : g.line_neighbours(a))
            if (h != b && g.line(b, h)) w_empty = false;
        if (w_empty) return remove_line_fast(e, a, b);
    }

    auto comp = chain_component_of(g, b);
    MixedGraph u = induced_subgraph(g, comp);  // all lines: a validated chain component

    std::vector<VertexId> prefix = c_set;
    if (kind == PairOpKind::remove_line) prefix.push_back(a);
    prefix.push_back(b);
    auto ordering = mcs_ordering(u, prefix);
    if (!ordering)
        throw std::logic_error("removal construction: chain component lost chordality");
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ordering->size(); ++i) pos[(*ordering)[i]] = static_cast<int>(i);

    MixedGraph out = g;
    out.remove_edge(a, b);
    for (VertexId x : comp)
        for (VertexId y : u.line_neighbours(x))
            if (x < y && out.line(x, y)) {
                if (pos[x] < pos[y])
                    out.orient(x, y);
                else
                    out.orient(y, x);
            }
    for (VertexId x : c_set)
        for (VertexId y : c_set)
            if (out.arrow(x, y)) out.undirect(x, y);

    return essentialize(out);
}

CandidateSet removal_candidates(const EssentialGraph& e, VertexId a, VertexId b, PairOpKind kind,
                                const EnumerationLimits& limits) {
    const MixedGraph& g = e.graph();
    std::set<VertexId> w =
        kind == PairOpKind::remove_arrow ? w_set_arrow(e, a, b) : w_set_line(e, a, b);
    std::vector<VertexId> heads(w.begin(), w.end());

    std::vector<std::vector<VertexId>> subsets;
    CandidateSet out;
    out.partial = complete_subsets(g, heads, limits.cap_for(heads.size()), subsets);

    const auto& pa_b = g.parents(b);
    for (const auto& c_set : subsets) {
        std::vector<VertexId> dropped;  // W \ C: the v-structures this move creates
        for (VertexId h : heads)
            if (!std::binary_search(c_set.begin(), c_set.end(), h)) dropped.push_back(h);

        Candidate cand;
        cand.characterization = {PairOp{a, b, kind}, heads_to_vstructures(dropped, a, b)};
        cand.delta.x = b;
        if (kind == PairOpKind::remove_arrow) {
            cand.delta.old_parents = sorted_union(pa_b, c_set);
            cand.delta.new_parents = sorted_union(pa_b, c_set, /*drop=*/a);
        } else {
            cand.delta.new_parents = sorted_union(pa_b, c_set);
            auto with_a = c_set;
            with_a.push_back(a);
            cand.delta.old_parents = sorted_union(pa_b, with_a);
        }
        out.items.push_back(std::move(cand));
    }
    return out;
}

/// The locally modified graph whose extendability decides an addition
/// candidate: line a -- b for an empty created-set, otherwise the arrow plus
/// the lines at its head directed inward for every created v-structure tail.
MixedGraph addition_start(const MixedGraph& g, VertexId a, VertexId b,
                          const std::set<VStructure>& created) {
    MixedGraph start = g;
    if (created.empty()) {
        start.add_line(a, b);
        return start;
    }
    VertexId head = created.begin()->head;  // all heads agree: a or b
    VertexId tail = head == b ? a : b;
    start.add_arrow(tail, head);
    for (const auto& v : created) {
        VertexId t = v.tail1 == tail ? v.tail2 : v.tail1;
        if (start.line(t, head)) start.orient(t, head);
    }
    return start;
}

void addition_candidates_for_direction(const EssentialGraph& e, VertexId tail, VertexId head,
                                       const std::set<VStructure>& forced,
                                       const std::set<VStructure>& optional,
                                       const EnumerationLimits& limits, CandidateSet& out,
                                       std::set<std::set<VStructure>>& emitted) {
    const MixedGraph& g = e.graph();
    std::vector<VertexId> tails;  // line-tail candidates whose subsets must be complete
    for (const auto& v : optional) tails.push_back(v.tail1 == tail ? v.tail2 : v.tail1);
    std::sort(tails.begin(), tails.end());

    std::vector<std::vector<VertexId>> subsets;
    if (complete_subsets(g, tails, limits.cap_for(tails.size()), subsets)) out.partial = true;

    for (const auto& f_set : subsets) {
        std::set<VStructure> created = forced;
        for (VertexId t : f_set) created.insert(VStructure(head, tail, t));
        if (!emitted.insert(created).second) continue;  // both directions propose the empty set

        MixedGraph start = addition_start(g, tail, head, created);
        auto extension = consistent_extension(start);
        if (!extension) continue;

        Candidate cand;
        VertexId x = created.empty() ? (extension->arrow(tail, head) ? head : tail) : head;
        VertexId y = x == head ? tail : head;
        cand.characterization = {
            PairOp{std::min(tail, head), std::max(tail, head), PairOpKind::add_edge}, created};
        cand.delta.x = x;
        const auto& pa_x = extension->parents(x);
        cand.delta.new_parents = {pa_x.begin(), pa_x.end()};
        cand.delta.old_parents = sorted_union(pa_x, {}, /*drop=*/y);
        out.items.push_back(std::move(cand));
    }
}

CandidateSet addition_candidates(const EssentialGraph& e, VertexId a, VertexId b,
                                 const EnumerationLimits& limits) {
    auto p = p_partition(e, a, b);
    CandidateSet out;
    std::set<std::set<VStructure>> emitted;
    addition_candidates_for_direction(e, a, b, p.p2, p.p1, limits, out, emitted);
    addition_candidates_for_direction(e, b, a, p.p4, p.p3, limits, out, emitted);
    return out;
}

NeighbourSet realize_all(const EssentialGraph& e, const CandidateSet& cands) {
    NeighbourSet out;
    out.partial = cands.partial;
    out.items.reserve(cands.items.size());
    for (const auto& c : cands.items) out.items.push_back(realize(e, c));
    return out;
}

}  // namespace

std::set<VertexId> w_set_arrow(const EssentialGraph& e, VertexId a, VertexId b) {
    const MixedGraph& g = e.graph();
    if (!g.arrow(a, b)) throw std::invalid_argument("w_set_arrow: no arrow at the pair");
    std::set<VertexId> out;
    for (VertexId h : g.children(a))
        if (h != b && g.line(b, h)) out.insert(h);
    return out;
}

std::set<VertexId> w_set_line(const EssentialGraph& e, VertexId a, VertexId b) {
    const MixedGraph& g = e.graph();
    if (!g.line(a, b)) throw std::invalid_argument("w_set_line: no line at the pair");
    std::set<VertexId> out;
    for (VertexId h : g.line_neighbours(a))
        if (h != b && g.line(b, h)) out.insert(h);
    return out;
}

PPartition p_partition(const EssentialGraph& e, VertexId a, VertexId b) {
    const MixedGraph& g = e.graph();
    if (g.adjacent(a, b)) throw std::invalid_argument("p_partition: pair already joined");
    PPartition p;
    for (VertexId t : g.line_neighbours(b))
        if (t != a && !g.adjacent(t, a)) p.p1.insert(VStructure(b, a, t));
    for (VertexId t : g.parents(b))
        if (t != a && !g.adjacent(t, a)) p.p2.insert(VStructure(b, a, t));
    for (VertexId t : g.line_neighbours(a))
        if (t != b && !g.adjacent(t, b)) p.p3.insert(VStructure(a, b, t));
    for (VertexId t : g.parents(a))
        if (t != b && !g.adjacent(t, b)) p.p4.insert(VStructure(a, b, t));
    return p;
}

NeighbourSet remove_arrow_neighbours(const EssentialGraph& e, VertexId a, VertexId b,
                                     const EnumerationLimits& limits) {
    return realize_all(e, removal_candidates(e, a, b, PairOpKind::remove_arrow, limits));
}

NeighbourSet remove_line_neighbours(const EssentialGraph& e, VertexId a, VertexId b,
                                    const EnumerationLimits& limits) {
    return realize_all(e, removal_candidates(e, a, b, PairOpKind::remove_line, limits));
}

NeighbourSet add_edge_neighbours(const EssentialGraph& e, VertexId a, VertexId b,
                                 const EnumerationLimits& limits) {
    return realize_all(e, addition_candidates(e, a, b, limits));
}

CandidateSet pair_candidates(const EssentialGraph& e, VertexId a, VertexId b,
                             const EnumerationLimits& limits) {
    const MixedGraph& g = e.graph();
    if (g.arrow(a, b)) return removal_candidates(e, a, b, PairOpKind::remove_arrow, limits);
    if (g.arrow(b, a)) return removal_candidates(e, b, a, PairOpKind::remove_arrow, limits);
    if (g.line(a, b))
        return removal_candidates(e, std::min(a, b), std::max(a, b), PairOpKind::remove_line,
                                  limits);
    return addition_candidates(e, std::min(a, b), std::max(a, b), limits);
}

Neighbour realize(const EssentialGraph& e, const Candidate& c) {
    const auto& ch = c.characterization;
    if (ch.op.kind == PairOpKind::add_edge) {
        MixedGraph start = addition_start(e.graph(), ch.op.a, ch.op.b, ch.created);
        auto extension = consistent_extension(start);
        if (!extension) throw std::logic_error("realize: addition candidate lost extendability");
        return Neighbour{ch, essentialize(*extension), c.delta};
    }
    std::set<VertexId> w = ch.op.kind == PairOpKind::remove_arrow
                               ? w_set_arrow(e, ch.op.a, ch.op.b)
                               : w_set_line(e, ch.op.a, ch.op.b);
    std::vector<VertexId> c_set;  // heads kept as parents: W minus the created v-structures
    for (VertexId h : w)
        if (!ch.created.count(VStructure(h, ch.op.a, ch.op.b))) c_set.push_back(h);
    return Neighbour{ch, build_removal_result(e, ch.op.a, ch.op.b, c_set, ch.op.kind), c.delta};
}

Boundary inclusion_boundary(const EssentialGraph& e, const EnumerationLimits& limits,
                            int threads) {
    const int n = e.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});

    std::vector<NeighbourSet> per_pair(pairs.size());
    auto work = [&](std::size_t i) {
        auto [a, b] = pairs[i];
        per_pair[i] = realize_all(e, pair_candidates(e, a, b, limits));
    };
    if (threads <= 1 || pairs.size() <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int k = std::min<int>(threads, static_cast<int>(pairs.size()));
        pool.reserve(k);
        for (int t = 0; t < k; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    Boundary out;
    for (const auto& set : per_pair) {
        out.partial = out.partial || set.partial;
        for (const auto& nb : set.items) {
            if (nb.grows_independences())
                out.independence_growing.push_back(nb);
            else
                out.independence_shrinking.push_back(nb);
        }
    }
    return out;
}

}  // namespace ecsearch
