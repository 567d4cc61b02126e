#include "ecsearch/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ecsearch/essential.hpp"

namespace ecsearch {

void Dataset::validate() const {
    if (names.size() != arities.size())
        throw std::invalid_argument("dataset: names and arities disagree");
    for (std::size_t v = 0; v < arities.size(); ++v)
        if (arities[v] < 1)
            throw std::invalid_argument("dataset: variable '" + names[v] + "' has arity 0");
    for (const auto& row : rows) {
        if (row.size() != names.size())
            throw std::invalid_argument("dataset: ragged row");
        for (std::size_t v = 0; v < row.size(); ++v)
            if (row[v] < 0 || row[v] >= arities[v])
                throw std::invalid_argument("dataset: cell out of range for '" + names[v] + "'");
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        std::size_t start = cell.find_first_not_of(' ');
        cells.push_back(start == std::string::npos ? "" : cell.substr(start));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Dataset Dataset::from_csv(std::istream& in, const std::vector<int>& declared_arities) {
    Dataset data;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv: missing header");
    data.names = split_csv_line(line);
    if (data.names.empty()) throw std::invalid_argument("csv: empty header");
    const std::size_t n = data.names.size();

    // strings are mapped to category indices in first-appearance order
    std::vector<std::map<std::string, int>> labels(n);
    std::vector<int> max_seen(n, -1);
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (cells.size() != n)
            throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                        ": expected " + std::to_string(n) + " cells");
        std::vector<int> row(n);
        for (std::size_t v = 0; v < n; ++v) {
            int value;
            if (all_digits(cells[v])) {
                value = std::stoi(cells[v]);
            } else {
                auto [it, fresh] =
                    labels[v].emplace(cells[v], static_cast<int>(labels[v].size()));
                (void)fresh;
                value = it->second;
            }
            max_seen[v] = std::max(max_seen[v], value);
            row[v] = value;
        }
        data.rows.push_back(std::move(row));
    }

    if (!declared_arities.empty()) {
        if (declared_arities.size() != n)
            throw std::invalid_argument("csv: declared arities do not match column count");
        data.arities = declared_arities;
    } else {
        data.arities.resize(n);
        for (std::size_t v = 0; v < n; ++v) data.arities[v] = std::max(max_seen[v] + 1, 1);
    }
    data.validate();
    return data;
}

Dataset Dataset::load_csv_file(const std::string& path, const std::vector<int>& declared_arities) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open data file '" + path + "'");
    return from_csv(in, declared_arities);
}

Metric parse_metric(const std::string& name, double ess) {
    if (name == "bic") return Bic{};
    if (name == "bdeu") {
        if (!(ess > 0)) throw std::invalid_argument("bdeu requires ess > 0");
        return Bdeu{ess};
    }
    throw std::invalid_argument("unknown metric '" + name + "'");
}

LocalKey::LocalKey(VertexId x_, std::vector<VertexId> parents_)
    : x(x_), parents(std::move(parents_)) {
    std::sort(parents.begin(), parents.end());
    for (std::size_t i = 0; i + 1 < parents.size(); ++i)
        if (parents[i] == parents[i + 1])
            throw std::invalid_argument("local key: repeated parent");
    if (std::binary_search(parents.begin(), parents.end(), x))
        throw std::invalid_argument("local key: x among its own parents");
}

namespace {

// Counts for one (x, parents) family: parent configurations are mixed-radix
// indices over the sorted parent list; only observed configurations are kept.
std::map<long long, std::vector<int>> family_counts(const LocalKey& key, const Dataset& data) {
    const int r = data.arities[key.x];
    std::map<long long, std::vector<int>> counts;
    for (const auto& row : data.rows) {
        long long config = 0;
        for (VertexId p : key.parents) config = config * data.arities[p] + row[p];
        auto [it, fresh] = counts.emplace(config, std::vector<int>());
        if (fresh) it->second.assign(r, 0);
        ++it->second[row[key.x]];
    }
    return counts;
}

double parent_config_count(const LocalKey& key, const Dataset& data) {
    double q = 1.0;
    for (VertexId p : key.parents) q *= data.arities[p];
    return q;
}

double bic_local(const LocalKey& key, const Dataset& data) {
    const int r = data.arities[key.x];
    double ll = 0.0;
    for (const auto& [config, xs] : family_counts(key, data)) {
        int nj = 0;
        for (int c : xs) nj += c;
        for (int c : xs)
            if (c > 0) ll += c * std::log(static_cast<double>(c) / nj);
    }
    const double q = parent_config_count(key, data);
    const double penalty = 0.5 * std::log(static_cast<double>(data.row_count())) * (r - 1) * q;
    return ll - penalty;
}

double bdeu_local(const LocalKey& key, const Dataset& data, double ess) {
    const int r = data.arities[key.x];
    const double q = parent_config_count(key, data);
    const double alpha_j = ess / q;
    const double alpha_jk = ess / (q * r);
    double score = 0.0;
    for (const auto& [config, xs] : family_counts(key, data)) {
        int nj = 0;
        for (int c : xs) nj += c;
        score += std::lgamma(alpha_j) - std::lgamma(alpha_j + nj);
        for (int c : xs)
            if (c > 0) score += std::lgamma(alpha_jk + c) - std::lgamma(alpha_jk);
    }
    return score;
}

double local_score_uncached(const LocalKey& key, const Dataset& data, const Metric& metric) {
    if (data.row_count() == 0) throw std::invalid_argument("local_score: empty dataset");
    if (key.x < 0 || key.x >= data.variable_count())
        throw std::invalid_argument("local_score: unknown variable");
    for (VertexId p : key.parents)
        if (p < 0 || p >= data.variable_count())
            throw std::invalid_argument("local_score: unknown parent");
    if (data.arities[key.x] < 1) throw std::invalid_argument("local_score: arity 0");
    if (std::holds_alternative<Bic>(metric)) return bic_local(key, data);
    return bdeu_local(key, data, std::get<Bdeu>(metric).ess);
}

}  // namespace

double local_score(const LocalKey& key, const Dataset& data, const Metric& metric,
                   LocalScoreCache* cache) {
    if (!cache) return local_score_uncached(key, data, metric);
    return cache->get_or_compute(key,
                                 [&] { return local_score_uncached(key, data, metric); });
}

double score_graph(const MixedGraph& g, const Dataset& data, const Metric& metric,
                   LocalScoreCache* cache) {
    if (g.vertex_count() != data.variable_count())
        throw std::invalid_argument("score_graph: graph and dataset sizes differ");
    MixedGraph dag(0);
    if (is_dag(g)) {
        dag = g;
    } else {
        auto extension = consistent_extension(g);
        if (!extension)
            throw std::invalid_argument("score_graph: graph has no consistent extension");
        dag = std::move(*extension);
    }
    double total = 0.0;
    for (VertexId x = 0; x < dag.vertex_count(); ++x) {
        const auto& pa = dag.parents(x);
        total += local_score(LocalKey(x, {pa.begin(), pa.end()}), data, metric, cache);
    }
    return total;
}

double apply_delta(double base_score, const DeltaSpec& delta, const Dataset& data,
                   const Metric& metric, LocalScoreCache* cache) {
    if (delta.old_parents == delta.new_parents) return base_score;
    return base_score + local_score(LocalKey(delta.x, delta.new_parents), data, metric, cache) -
           local_score(LocalKey(delta.x, delta.old_parents), data, metric, cache);
}

}  // namespace ecsearch
