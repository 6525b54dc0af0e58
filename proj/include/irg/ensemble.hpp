#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "irg/graphgen.hpp"
#include "irg/stat_table.hpp"

// Ensemble orchestration: replicated sampling with derived substreams,
// requested statistics collected into a StatTable in replica order.

namespace irg {

enum class Statistic {
    degree,
    wedges,
    triangles,
    dust,
    joint_degree,
    coarse_grain,
};

enum class SamplerKind { fast, naive };

struct EnsembleSpec {
    explicit EnsembleSpec(ModelParams p) : params(std::move(p)) {}

    ModelParams params;
    std::uint64_t replicas = 1;
    std::uint64_t master_seed = 0;
    std::set<Statistic> statistics{Statistic::degree};
    // 0-based vertex labels observed by the joint-degree statistic.
    std::pair<std::uint32_t, std::uint32_t> joint_nodes{0, 1};
    std::vector<std::pair<double, double>> pgf_grid;
    std::string output_path;  // empty: no file output
    // Fresh weights per replica by default (the annealed view); pinned mode
    // reuses the replica-0 weight substream for every replica (quenched).
    bool pinned_weights = false;
    SamplerKind sampler = SamplerKind::fast;
    std::size_t coarse_block = 1;
    unsigned threads = 1;

    void validate() const;
};

// Runs every replica (concurrently if threads > 1), merging rows in
// replica-id order. A replica failure aborts the whole run; nothing is
// silently dropped. If output_path is set the table is also written there.
StatTable run_ensemble(const EnsembleSpec& spec);

// Dust scan over a (k, n) grid at eps = k * n^{-1/alpha}: fraction of
// replicas with isolated nodes, mean N0 with standard error, and both
// analytic expectations (product form and conditional form), plus the two
// threshold constants in the metadata.
StatTable experiment_dust_scan(TailIndex alpha, const std::vector<double>& k_grid,
                               const std::vector<std::size_t>& n_grid,
                               std::uint64_t replicas, std::uint64_t master_seed,
                               unsigned threads = 1);

std::string statistic_name(Statistic s);
Statistic statistic_from_name(const std::string& name);

}  // namespace irg
