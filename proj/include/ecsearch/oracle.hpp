#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <tuple>
#include <vector>

#include "ecsearch/essential.hpp"
#include "ecsearch/graph.hpp"

namespace ecsearch {

/// All labeled DAGs on n vertices, each exactly once.
/// pre: n <= 5 (29281 DAGs at n = 5).
std::vector<MixedGraph> enumerate_dags(int n);

/// Labeled-DAG counting recurrence, used to cross-check the enumerator.
long long labeled_dag_count(int n);

/// Pairwise separation statements (u, v, W): W blocks every active trail
/// between u and v. Vertices are singletons; W is a bitmask over the others.
/// Equal fingerprints characterize equivalence; strict inclusion orders the
/// classes by independence.
class IndependenceFingerprint {
public:
    using Triple = std::tuple<VertexId, VertexId, std::uint32_t>;  // u < v

    void insert(VertexId u, VertexId v, std::uint32_t w_mask);
    bool operator==(const IndependenceFingerprint& o) const { return triples_ == o.triples_; }
    bool strict_subset_of(const IndependenceFingerprint& o) const;
    std::size_t size() const { return triples_.size(); }
    const std::set<Triple>& triples() const { return triples_; }

private:
    std::set<Triple> triples_;
};

/// True iff every trail between `sources` and `targets` is blocked by
/// `given` (reachability sweep over trail states).
bool d_separated(const MixedGraph& dag, const std::set<VertexId>& sources,
                 const std::set<VertexId>& targets, const std::set<VertexId>& given);

/// Fingerprint over singleton pairs with every conditioning set.
IndependenceFingerprint independences(const MixedGraph& dag);

/// Full-set fingerprint over all disjoint (U, V, W) with U, V non-empty,
/// stored as canonical mask triples. Exponential; intended for n <= 3 checks
/// of the singleton restriction.
std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> full_independences(
    const MixedGraph& dag);

/// Every essential graph on n vertices with its fingerprint, in graph order.
struct ClassCatalogue {
    std::vector<EssentialGraph> classes;
    std::vector<IndependenceFingerprint> fingerprints;

    static ClassCatalogue build(int n);  // pre: n <= 5
    std::size_t index_of(const EssentialGraph& e) const;  // throws if absent
};

struct DefinitionalBoundary {
    std::vector<MixedGraph> independence_growing;    // strictly larger fingerprints, minimal
    std::vector<MixedGraph> independence_shrinking;  // strictly smaller fingerprints, maximal
};

/// Boundary straight from the definition: compare fingerprints by strict
/// inclusion across every class on the vertex set, keep the covers.
/// pre: n <= 4.
DefinitionalBoundary boundary_by_definition(const EssentialGraph& e);
DefinitionalBoundary boundary_by_definition(const EssentialGraph& e,
                                            const ClassCatalogue& catalogue);

/// Boundary via single-arrow edits of class members: remove or add one arrow
/// in every member, reduce, deduplicate.
DefinitionalBoundary boundary_by_lemma41(const EssentialGraph& e);

/// Exhaustive check families shared by the CLI and the acceptance suite.
/// Each prints a short summary to `log` and returns overall success.
bool check_essentialize_exhaustive(int n, std::ostream& log);
bool check_boundary_exhaustive(int n, std::ostream& log);

}  // namespace ecsearch
