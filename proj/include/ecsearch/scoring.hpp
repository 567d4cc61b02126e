#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecsearch/graph.hpp"
#include "ecsearch/neighbourhood.hpp"

namespace ecsearch {

/// Categorical data: one column per variable, cells are category indices.
struct Dataset {
    std::vector<std::string> names;
    std::vector<int> arities;              // per variable, >= 1
    std::vector<std::vector<int>> rows;    // rows[r][v] < arities[v]

    int variable_count() const { return static_cast<int>(names.size()); }
    int row_count() const { return static_cast<int>(rows.size()); }

    void validate() const;  // throws on shape or range errors

    /// First row is the header. Cells are non-negative integers, or strings
    /// mapped to categories in first-appearance order. Arities are inferred
    /// as max index + 1 unless `declared_arities` overrides them.
    static Dataset from_csv(std::istream& in,
                            const std::vector<int>& declared_arities = {});
    static Dataset load_csv_file(const std::string& path,
                                 const std::vector<int>& declared_arities = {});
};

struct Bic {};
struct Bdeu {
    double ess = 1.0;  // equivalent sample size, > 0
};
using Metric = std::variant<Bic, Bdeu>;

Metric parse_metric(const std::string& name, double ess);  // "bic" | "bdeu"

/// One vertex and its parent set: the unit the decomposable score sums over.
struct LocalKey {
    VertexId x = -1;
    std::vector<VertexId> parents;  // sorted, x excluded

    LocalKey() = default;
    LocalKey(VertexId x_, std::vector<VertexId> parents_);

    auto operator<=>(const LocalKey&) const = default;
};

/// Memoized local scores. Lookups may run concurrently; insertion races keep
/// the first value (computation is deterministic, so values agree).
class LocalScoreCache {
public:
    template <typename Fn>
    double get_or_compute(const LocalKey& key, Fn&& compute) {
        {
            std::lock_guard lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) {
                ++hits_;
                return it->second;
            }
            ++misses_;
        }
        double value = compute();
        std::lock_guard lock(mutex_);
        return map_.emplace(key, value).first->second;
    }

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }
    std::size_t size() const { return map_.size(); }

private:
    mutable std::mutex mutex_;
    std::map<LocalKey, double> map_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

/// Log-space local score f(x, parents).
/// BIC: maximized log-likelihood minus (log N / 2) * (arity-1) * parent configs.
/// BDeu: Dirichlet-equivalent-uniform marginal likelihood with total pseudo
/// count `ess` split evenly over the (x, parent) configurations.
double local_score(const LocalKey& key, const Dataset& data, const Metric& metric,
                   LocalScoreCache* cache = nullptr);

/// Sum of local scores over all vertices. Accepts a DAG directly; any other
/// graph is scored through one consistent extension.
double score_graph(const MixedGraph& g, const Dataset& data, const Metric& metric,
                   LocalScoreCache* cache = nullptr);

/// base + f(x, new parents) - f(x, old parents).
double apply_delta(double base_score, const DeltaSpec& delta, const Dataset& data,
                   const Metric& metric, LocalScoreCache* cache = nullptr);

}  // namespace ecsearch
