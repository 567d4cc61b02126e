#include "ecsearch/search.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ecsearch {

namespace {

constexpr double kImprovementEps = 1e-9;

MixedGraph start_graph(const Dataset& data, const SearchConfig& cfg) {
    const int n = data.variable_count();
    if (cfg.start == StartKind::empty) return MixedGraph(n);
    if (cfg.start == StartKind::complete) {
        MixedGraph g(n);
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b) g.add_line(a, b);
        return g;
    }
    if (!cfg.start_graph) throw std::invalid_argument("hill_climb: start graph missing");
    if (cfg.start_graph->vertex_count() != n)
        throw std::invalid_argument("hill_climb: start graph does not match the dataset");
    return *cfg.start_graph;
}

using Pair = std::pair<VertexId, VertexId>;

struct ScoredCandidate {
    Candidate candidate;
    double delta = 0.0;
};

struct PairState {
    std::vector<ScoredCandidate> scored;
    bool partial = false;
};

/// Vertices whose chain component (in either graph) contains an endpoint of a
/// changed edge. Cached enumerations of pairs outside this set stay valid.
std::set<VertexId> touched_vertices(const MixedGraph& before, const MixedGraph& after) {
    std::set<VertexId> endpoints;
    for (const auto& e : before.edges())
        if (!after.edges().count(e)) {
            endpoints.insert(e.first);
            endpoints.insert(e.second);
        }
    for (const auto& e : after.edges())
        if (!before.edges().count(e)) {
            endpoints.insert(e.first);
            endpoints.insert(e.second);
        }
    std::set<VertexId> out;
    for (const MixedGraph* g : {&before, &after})
        for (const auto& comp : chain_components(*g)) {
            bool hit = false;
            for (VertexId v : comp)
                if (endpoints.count(v)) hit = true;
            if (hit) out.insert(comp.begin(), comp.end());
        }
    return out;
}

}  // namespace

SearchResult hill_climb(const Dataset& data, const SearchConfig& cfg, LocalScoreCache* cache) {
    data.validate();
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("hill_climb: max_iterations must be >= 1");

    LocalScoreCache local_cache;
    if (!cache) cache = &local_cache;

    EssentialGraph current = [&] {
        MixedGraph g0 = start_graph(data, cfg);
        if (is_dag(g0)) return essentialize(g0);
        return EssentialGraph(std::move(g0));
    }();
    double score = score_graph(current.graph(), data, cfg.metric, cache);

    const int n = current.vertex_count();
    std::vector<Pair> pairs;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});

    std::map<Pair, PairState> state;
    std::set<Pair> dirty(pairs.begin(), pairs.end());

    SearchResult result{current, score, {}, StopReason::local_optimum};
    bool partial_seen = false;
    int moves = 0;

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        auto t0 = std::chrono::steady_clock::now();

        std::vector<Pair> todo(dirty.begin(), dirty.end());
        auto refresh = [&](std::size_t i) {
            auto [a, b] = todo[i];
            auto cands = pair_candidates(current, a, b, cfg.limits);
            PairState ps;
            ps.partial = cands.partial;
            ps.scored.reserve(cands.items.size());
            for (auto& c : cands.items) {
                double d = apply_delta(0.0, c.delta, data, cfg.metric, cache);
                ps.scored.push_back({std::move(c), d});
            }
            state[todo[i]] = std::move(ps);
        };
        if (cfg.threads <= 1 || todo.size() <= 1) {
            for (std::size_t i = 0; i < todo.size(); ++i) refresh(i);
        } else {
            // pre-create map slots so workers never mutate the map itself
            for (const auto& p : todo) state[p];
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            int k = std::min<int>(cfg.threads, static_cast<int>(todo.size()));
            for (int t = 0; t < k; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = next.fetch_add(1); i < todo.size();
                         i = next.fetch_add(1))
                        refresh(i);
                });
            for (auto& th : pool) th.join();
        }
        dirty.clear();

        std::size_t neighbourhood_size = 0;
        bool iteration_partial = false;
        const ScoredCandidate* best = nullptr;
        for (const auto& [pair, ps] : state) {
            neighbourhood_size += ps.scored.size();
            iteration_partial = iteration_partial || ps.partial;
            for (const auto& sc : ps.scored) {
                if (sc.delta <= kImprovementEps) continue;
                if (!best || sc.delta > best->delta ||
                    (sc.delta == best->delta &&
                     sc.candidate.characterization < best->candidate.characterization))
                    best = &sc;
            }
        }
        partial_seen = partial_seen || iteration_partial;

        if (!best) {
            result.stop =
                partial_seen ? StopReason::best_found_partial : StopReason::local_optimum;
            break;
        }

        Neighbour chosen = realize(current, best->candidate);
        MixedGraph before = current.graph();
        current = chosen.result;
        score += best->delta;
        ++moves;

        auto touched = touched_vertices(before, current.graph());
        for (const auto& p : pairs)
            if (touched.count(p.first) || touched.count(p.second)) dirty.insert(p);
#ifndef NDEBUG
        if (moves % 10 == 0) dirty.insert(pairs.begin(), pairs.end());
#endif

        double wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        result.trace.push_back({iter, best->candidate.characterization, best->delta, score,
                                neighbourhood_size, iteration_partial, wall_ms});

        if (iter == cfg.max_iterations) result.stop = StopReason::iteration_cap;
    }

    result.graph = current;
    result.score = score;
    return result;
}

namespace {

const char* kind_name(PairOpKind k) {
    switch (k) {
        case PairOpKind::remove_arrow: return "remove-arrow";
        case PairOpKind::remove_line: return "remove-line";
        case PairOpKind::add_edge: return "add-edge";
    }
    return "?";
}

}  // namespace

std::string trace_csv(const std::vector<TraceEntry>& trace,
                      const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "iteration,kind,a,b,created,delta,score,neighbourhood,partial,wall_ms\n";
    out.precision(17);
    for (const auto& t : trace) {
        const auto& op = t.chosen.op;
        out << t.iteration << ',' << kind_name(op.kind) << ',' << names.at(op.a) << ','
            << names.at(op.b) << ',';
        bool first = true;
        for (const auto& v : t.chosen.created) {
            if (!first) out << ';';
            first = false;
            out << names.at(v.head) << '|' << names.at(v.tail1) << '|' << names.at(v.tail2);
        }
        out << ',' << t.delta << ',' << t.score << ',' << t.neighbourhood_size << ','
            << (t.partial ? 1 : 0) << ',' << t.wall_ms << '\n';
    }
    return out.str();
}

}  // namespace ecsearch
