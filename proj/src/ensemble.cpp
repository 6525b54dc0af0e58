#include "irg/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "irg/motifs.hpp"
#include "irg/oracles.hpp"
#include "irg/seeding.hpp"
#include "irg/stats.hpp"
#include "irg/version.hpp"

namespace irg {
namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string epsilon_rule_string(const ModelParams& p) {
    if (const auto* e = std::get_if<ExplicitEpsilon>(&p.epsilon_rule)) {
        return "explicit:" + format_double(e->eps);
    }
    return "critical:" + format_double(std::get<CriticalScale>(p.epsilon_rule).k);
}

}  // namespace

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::degree: return "degree";
        case Statistic::wedges: return "wedges";
        case Statistic::triangles: return "triangles";
        case Statistic::dust: return "dust";
        case Statistic::joint_degree: return "joint-degree";
        case Statistic::coarse_grain: return "coarse-grain";
    }
    throw std::logic_error("statistic_name: unknown statistic");
}

Statistic statistic_from_name(const std::string& name) {
    if (name == "degree") return Statistic::degree;
    if (name == "wedges") return Statistic::wedges;
    if (name == "triangles") return Statistic::triangles;
    if (name == "dust") return Statistic::dust;
    if (name == "joint-degree") return Statistic::joint_degree;
    if (name == "coarse-grain") return Statistic::coarse_grain;
    throw std::invalid_argument("unknown statistic: " + name);
}

void EnsembleSpec::validate() const {
    if (replicas < 1) throw std::invalid_argument("EnsembleSpec: replicas must be >= 1");
    if (statistics.empty()) {
        throw std::invalid_argument("EnsembleSpec: no statistics requested");
    }
    if (statistics.count(Statistic::joint_degree) &&
        (joint_nodes.first == joint_nodes.second || joint_nodes.first >= params.n ||
         joint_nodes.second >= params.n)) {
        throw std::invalid_argument("EnsembleSpec: joint nodes must be distinct and < n");
    }
    if ((statistics.count(Statistic::wedges) || statistics.count(Statistic::triangles)) &&
        joint_nodes.first >= params.n) {
        throw std::invalid_argument("EnsembleSpec: observed node must be < n");
    }
    if (statistics.count(Statistic::coarse_grain) &&
        (coarse_block < 1 || params.n % coarse_block != 0)) {
        throw std::invalid_argument("EnsembleSpec: coarse block size must divide n");
    }
    for (const auto& [t, s] : pgf_grid) {
        if (!(t > 0.0) || t > 1.0 || !(s > 0.0) || s > 1.0) {
            throw std::invalid_argument("EnsembleSpec: pgf grid entries must lie in (0,1]");
        }
    }
}

StatTable run_ensemble(const EnsembleSpec& spec) {
    spec.validate();
    const auto want = [&](Statistic s) { return spec.statistics.count(s) > 0; };

    StatTable table;
    table.columns.push_back("replica");
    if (want(Statistic::degree)) {
        for (const char* c : {"n", "edges", "mean_degree", "max_degree", "isolated"}) {
            table.columns.push_back(c);
        }
    }
    if (want(Statistic::dust) && !want(Statistic::degree)) {
        table.columns.push_back("isolated");
    }
    if (want(Statistic::wedges)) {
        for (const char* c : {"wedges_total_def", "wedges_node_def", "wedges_node_thm"}) {
            table.columns.push_back(c);
        }
    }
    if (want(Statistic::triangles)) {
        for (const char* c : {"triangles_total", "triangles_node_x3"}) {
            table.columns.push_back(c);
        }
    }
    if (want(Statistic::joint_degree)) {
        table.columns.push_back("deg_i");
        table.columns.push_back("deg_j");
    }
    if (want(Statistic::coarse_grain)) {
        for (const char* c : {"coarse_n", "coarse_edges", "coarse_isolated",
                              "coarse_weight_sum"}) {
            table.columns.push_back(c);
        }
    }

    const std::uint64_t pinned_seed =
        seeding::derive_substream(spec.master_seed, 0, StreamPurpose::weights);

    std::vector<std::vector<Cell>> rows(spec.replicas);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    auto worker = [&]() {
        try {
            for (;;) {
                const std::uint64_t r = next.fetch_add(1);
                if (r >= spec.replicas || failed.load()) break;
                const std::uint64_t wseed =
                    spec.pinned_weights
                        ? pinned_seed
                        : seeding::derive_substream(spec.master_seed, r,
                                                    StreamPurpose::weights);
                const std::uint64_t gseed =
                    seeding::derive_substream(spec.master_seed, r, StreamPurpose::graph);
                WeightVector weights =
                    heavytail::sample_weights(spec.params.n, spec.params.alpha, wseed);
                GraphSample g =
                    spec.sampler == SamplerKind::fast
                        ? graphgen::sample_graph_fast(spec.params, weights, gseed, r)
                        : graphgen::sample_graph(spec.params, weights, gseed, r);

                std::vector<Cell> row;
                row.emplace_back(static_cast<std::int64_t>(r));
                DegreeRecord deg = motifs::degree_sequence(g);
                if (want(Statistic::degree)) {
                    row.emplace_back(static_cast<std::int64_t>(g.n));
                    row.emplace_back(static_cast<std::int64_t>(g.edge_count()));
                    row.emplace_back(deg.mean());
                    row.emplace_back(static_cast<std::int64_t>(deg.max()));
                    row.emplace_back(static_cast<std::int64_t>(motifs::isolated_count(g)));
                }
                if (want(Statistic::dust) && !want(Statistic::degree)) {
                    row.emplace_back(static_cast<std::int64_t>(motifs::isolated_count(g)));
                }
                if (want(Statistic::wedges)) {
                    std::int64_t total = 0;
                    for (std::uint32_t d : deg.degree) {
                        total += static_cast<std::int64_t>(d) * (d - 1) / 2;
                    }
                    row.emplace_back(total);
                    row.emplace_back(motifs::wedge_count(g, spec.joint_nodes.first,
                                                         WedgeConvention::definition));
                    row.emplace_back(motifs::wedge_count(g, spec.joint_nodes.first,
                                                         WedgeConvention::theorem));
                }
                if (want(Statistic::triangles)) {
                    TriangleCounts tc = motifs::triangle_counts(g);
                    row.emplace_back(tc.total);
                    row.emplace_back(tc.per_node_x3[spec.joint_nodes.first]);
                }
                if (want(Statistic::joint_degree)) {
                    row.emplace_back(
                        static_cast<std::int64_t>(deg.degree[spec.joint_nodes.first]));
                    row.emplace_back(
                        static_cast<std::int64_t>(deg.degree[spec.joint_nodes.second]));
                }
                if (want(Statistic::coarse_grain)) {
                    auto [cg, cw] = graphgen::coarse_grain(g, weights, spec.coarse_block);
                    row.emplace_back(static_cast<std::int64_t>(cg.n));
                    row.emplace_back(static_cast<std::int64_t>(cg.edge_count()));
                    row.emplace_back(static_cast<std::int64_t>(motifs::isolated_count(cg)));
                    row.emplace_back(
                        std::accumulate(cw.values.begin(), cw.values.end(), 0.0));
                }
                rows[r] = std::move(row);
            }
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };

    const unsigned threads = std::max(1u, spec.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    table.rows = std::move(rows);

    table.set_meta("version", kVersion);
    table.set_meta("n", std::to_string(spec.params.n));
    table.set_meta("alpha", format_double(spec.params.alpha.value()));
    table.set_meta("eps_rule", epsilon_rule_string(spec.params));
    table.set_meta("eps", format_double(spec.params.epsilon()));
    table.set_meta("replicas", std::to_string(spec.replicas));
    table.set_meta("master_seed", std::to_string(spec.master_seed));
    {
        std::string stats;
        for (Statistic s : spec.statistics) {
            if (!stats.empty()) stats += "+";
            stats += statistic_name(s);
        }
        table.set_meta("statistics", stats);
    }
    table.set_meta("joint_nodes", std::to_string(spec.joint_nodes.first) + "," +
                                      std::to_string(spec.joint_nodes.second));
    if (want(Statistic::joint_degree) && !spec.pgf_grid.empty()) {
        // ensemble-level PGF estimates live in the metadata: one entry per
        // (t,s) grid point, "value,standard_error"
        auto col = [&](const char* name) {
            return static_cast<std::size_t>(
                std::find(table.columns.begin(), table.columns.end(), name) -
                table.columns.begin());
        };
        const std::size_t ci = col("deg_i"), cj = col("deg_j");
        std::vector<std::pair<std::uint32_t, std::uint32_t>> obs;
        obs.reserve(table.rows.size());
        for (const auto& row : table.rows) {
            obs.emplace_back(
                static_cast<std::uint32_t>(std::get<std::int64_t>(row[ci])),
                static_cast<std::uint32_t>(std::get<std::int64_t>(row[cj])));
        }
        for (const auto& [t, s] : spec.pgf_grid) {
            auto est = motifs::empirical_joint_pgf(obs, t, s);
            table.set_meta("pgf_" + format_double(t) + "_" + format_double(s),
                           format_double(est.value) + "," + format_double(est.standard_error));
        }
    }
    table.set_meta("pinned_weights", spec.pinned_weights ? "true" : "false");
    table.set_meta("sampler", spec.sampler == SamplerKind::fast ? "fast" : "naive");
    if (want(Statistic::coarse_grain)) {
        table.set_meta("coarse_block", std::to_string(spec.coarse_block));
    }

    if (!spec.output_path.empty()) {
        table.write_csv_file(spec.output_path);
    }
    return table;
}

StatTable experiment_dust_scan(TailIndex alpha, const std::vector<double>& k_grid,
                               const std::vector<std::size_t>& n_grid,
                               std::uint64_t replicas, std::uint64_t master_seed,
                               unsigned threads) {
    if (k_grid.empty() || n_grid.empty()) {
        throw std::invalid_argument("experiment_dust_scan: empty grid");
    }
    for (double k : k_grid) {
        if (!(k > 0.0)) throw std::invalid_argument("experiment_dust_scan: k must be > 0");
    }
    for (std::size_t i = 0; i + 1 < n_grid.size(); ++i) {
        if (n_grid[i] >= n_grid[i + 1]) {
            throw std::invalid_argument("experiment_dust_scan: n grid must increase");
        }
    }

    StatTable table;
    table.columns = {"k",       "n",       "eps",          "replicas",
                     "frac_with_dust",     "mean_n0",      "se_n0",
                     "oracle_product_form", "oracle_conditional"};

    std::uint64_t cell_index = 0;
    for (double k : k_grid) {
        for (std::size_t n : n_grid) {
            EnsembleSpec spec{ModelParams(n, alpha, CriticalScale{k})};
            spec.replicas = replicas;
            spec.master_seed =
                seeding::mix64(master_seed + 0x9E3779B97F4A7C15ULL * (++cell_index));
            spec.statistics = {Statistic::dust};
            spec.threads = threads;
            StatTable cell = run_ensemble(spec);

            std::vector<double> n0s;
            n0s.reserve(cell.rows.size());
            std::size_t with_dust = 0;
            for (const auto& row : cell.rows) {
                auto n0 = static_cast<double>(std::get<std::int64_t>(row[1]));
                n0s.push_back(n0);
                if (n0 > 0) ++with_dust;
            }
            auto ms = stats::mean_se(n0s);
            const double eps = spec.params.epsilon();
            table.rows.push_back({k, static_cast<std::int64_t>(n), eps,
                                  static_cast<std::int64_t>(replicas),
                                  static_cast<double>(with_dust) / static_cast<double>(replicas),
                                  ms.mean, ms.se,
                                  oracles::dust_expectation(n, eps, alpha),
                                  oracles::dust_expectation_conditional(n, eps, alpha)});
        }
    }

    auto thresholds = oracles::dust_thresholds(alpha);
    table.set_meta("version", kVersion);
    table.set_meta("experiment", "dust-scan");
    table.set_meta("alpha", format_double(alpha.value()));
    table.set_meta("replicas", std::to_string(replicas));
    table.set_meta("master_seed", std::to_string(master_seed));
    table.set_meta("k1_star", format_double(thresholds.k1_star));
    table.set_meta("k2_star", format_double(thresholds.k2_star));
    return table;
}

}  // namespace irg
