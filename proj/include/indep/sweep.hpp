#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indep/dag.hpp"

namespace indep {

struct SweepConfig {
    int max_n = 4;
    /// Exhaustive when absent; otherwise this many random DAGs with
    /// max_n - 1 or max_n vertices.
    std::optional<int> sample;
    std::uint64_t seed = 0;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct PropertyResult {
    std::string id;
    std::string description;
    long checks = 0;     // graphs on which the property was exercised
    long failures = 0;
    std::string counterexample;  // graph JSON of the first failing graph
    std::string detail;          // what failed on it
    bool ok() const { return failures == 0; }
};

struct SweepReport {
    std::vector<std::pair<int, long>> graphs_per_n;  // (n, count)
    long graphs = 0;
    std::vector<PropertyResult> properties;
    /// Graphs on which the images of the two theta compositions differ.
    long theta_images_differ = 0;
    bool ok() const;
};

/// Random DAGs: the vertex count is uniform in [min_n, max_n]; each unordered
/// pair then gets no edge or one of the two orientations uniformly, redrawing
/// until the result is acyclic.
std::vector<Dag> random_dags(int count, int min_n, int max_n, std::uint64_t seed);

/// Runs every property on every graph. Per-graph work is spread over a thread
/// pool; results are merged in generation order, so the report is
/// deterministic.
SweepReport run_sweep(const SweepConfig& cfg);
SweepReport run_sweep(const std::vector<Dag>& graphs, unsigned threads = 0);

}  // namespace indep
