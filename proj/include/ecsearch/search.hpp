#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecsearch/essential.hpp"
#include "ecsearch/neighbourhood.hpp"
#include "ecsearch/scoring.hpp"

namespace ecsearch {

enum class StartKind { empty, complete, given };

struct SearchConfig {
    StartKind start = StartKind::empty;
    std::optional<MixedGraph> start_graph;  // required when start == given
    Metric metric = Bic{};
    int max_iterations = 1000;              // >= 1
    EnumerationLimits limits;
    unsigned seed = 0;                      // reserved for randomized extensions
    int threads = 1;
};

struct TraceEntry {
    int iteration = 0;
    Characterization chosen;
    double delta = 0.0;
    double score = 0.0;
    std::size_t neighbourhood_size = 0;
    bool partial = false;
    double wall_ms = 0.0;
};

enum class StopReason { local_optimum, best_found_partial, iteration_cap };

struct SearchResult {
    EssentialGraph graph;
    double score = 0.0;
    std::vector<TraceEntry> trace;
    StopReason stop = StopReason::local_optimum;
};

/// Greedy ascent over essential graphs: enumerate the inclusion boundary of
/// the current state, score every candidate incrementally, take the best
/// strictly improving move, stop when none remains. After a move only pairs
/// with an endpoint in a chain component touched by the move are
/// re-enumerated (in debug builds a full refresh runs every 10 moves).
/// Deterministic: score ties break on the lexicographically smallest
/// characterization.
SearchResult hill_climb(const Dataset& data, const SearchConfig& cfg,
                        LocalScoreCache* cache = nullptr);

std::string trace_csv(const std::vector<TraceEntry>& trace,
                      const std::vector<std::string>& names);

}  // namespace ecsearch
