#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecsearch/graph.hpp"

namespace ecsearch {

/// The four conditions an essential graph must satisfy, in the order they
/// are checked. `none` means the graph passed.
enum class EssentialViolation {
    none,
    not_chain_graph,            // a directed cycle exists
    component_not_chordal,      // some chain component induces a chordless cycle
    induced_arrow_line,         // induced a -> b -- c
    arrow_not_strongly_protected,
};

struct ValidationReport {
    bool ok = false;
    EssentialViolation violation = EssentialViolation::none;
    std::string witness;  // human-readable: the cycle, component, triple or arrow

    explicit operator bool() const { return ok; }
};

/// Checks the four essential-graph conditions in order and reports the first
/// one violated, with a witness.
ValidationReport validate_essential(const MixedGraph& g);

/// A mixed graph certified to be the canonical representative of a Markov
/// equivalence class. The constructor validates; everything downstream may
/// rely on the four conditions.
class EssentialGraph {
public:
    explicit EssentialGraph(MixedGraph g);  // throws std::invalid_argument if invalid

    const MixedGraph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }

    bool operator==(const EssentialGraph& o) const { return graph_ == o.graph_; }
    bool operator<(const EssentialGraph& o) const { return graph_ < o.graph_; }

private:
    MixedGraph graph_;
};

/// Repeatedly converts every arrow that is not strongly protected into a
/// line, all at once per pass, until a fixpoint, then validates the result.
/// Accepts a DAG, or a warm start known to reduce to the same fixpoint; a
/// fixpoint that fails validation signals a precondition breach and throws.
EssentialGraph essentialize(const MixedGraph& g0);

/// True iff the two DAGs have the same skeleton and the same v-structures.
bool same_class(const MixedGraph& d1, const MixedGraph& d2);

/// A DAG with g's skeleton and v-structures containing every arrow of g, if
/// one exists. Peeling is deterministic (smallest eligible vertex first).
std::optional<MixedGraph> consistent_extension(const MixedGraph& g);

/// Every DAG of the class represented by e, each exactly once: all
/// collider-free acyclic orientations per chain component, combined across
/// components.
std::vector<MixedGraph> class_members(const EssentialGraph& e);

/// Removing a line both of whose endpoints share no common line-neighbour
/// leaves an essential graph; no fixpoint iteration needed.
/// pre: line a -- b in e; no h with a -- h and b -- h.
EssentialGraph remove_line_fast(const EssentialGraph& e, VertexId a, VertexId b);

}  // namespace ecsearch
