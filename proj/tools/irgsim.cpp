// Command-line front end: sample graphs from the ensemble, measure
// degree/motif/dust statistics over replicated runs, and verify the
// implementation against its analytic oracles.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "irg/ensemble.hpp"
#include "irg/graphgen.hpp"
#include "irg/heavytail.hpp"
#include "irg/motifs.hpp"
#include "irg/seeding.hpp"
#include "irg/verify.hpp"
#include "irg/version.hpp"

namespace {

struct CommonOpts {
    std::size_t n = 1000;
    double alpha = 0.5;
    std::optional<double> eps;
    std::optional<double> k_critical;
    std::uint64_t replicas = 1;
    std::uint64_t seed = 0;
    std::string out;
    std::string config;
    unsigned threads = 1;
    std::string sampler = "fast";
    bool pinned_weights = false;
};

// Flat key=value config file; '#' starts a comment. Every key mirrors the
// CLI flag of the same name and is overridden by it.
void apply_config(const std::string& path, CommonOpts& o) {
    std::ifstream is(path);
    if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = line.find_first_not_of(" \t\r");
        if (notspace == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError(
                "--config", path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "n") o.n = std::stoull(value);
        else if (key == "alpha") o.alpha = std::stod(value);
        else if (key == "eps") o.eps = std::stod(value);
        else if (key == "k-critical") o.k_critical = std::stod(value);
        else if (key == "replicas") o.replicas = std::stoull(value);
        else if (key == "seed") o.seed = std::stoull(value);
        else if (key == "out") o.out = value;
        else if (key == "threads") o.threads = static_cast<unsigned>(std::stoul(value));
        else if (key == "sampler") o.sampler = value;
        else if (key == "pinned-weights") o.pinned_weights = (value == "true" || value == "1");
        else {
            throw CLI::ValidationError("--config", path + ": unknown key '" + key + "'");
        }
    }
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "number of vertices");
    cmd->add_option("--alpha", o.alpha, "Pareto tail index in (0,1)");
    auto* eps = cmd->add_option("--eps", o.eps, "explicit edge-density parameter");
    cmd->add_option("--k-critical", o.k_critical,
                    "critical-scale prefactor: eps = k * n^(-1/alpha)")
        ->excludes(eps);
    cmd->add_option("--replicas", o.replicas, "number of replicas");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--config", o.config, "key=value config file; flags override");
    cmd->add_option("--threads", o.threads, "worker threads for replicas");
    cmd->add_option("--sampler", o.sampler, "fast | naive")
        ->check(CLI::IsMember({"fast", "naive"}));
    cmd->add_flag("--pinned-weights", o.pinned_weights,
                  "reuse one weight realization across replicas (quenched view)");
}

irg::ModelParams make_params(const CommonOpts& o) {
    irg::TailIndex alpha(o.alpha);
    if (o.eps && o.k_critical) {
        throw CLI::ValidationError("--eps", "give either --eps or --k-critical, not both");
    }
    if (o.eps) return irg::ModelParams(o.n, alpha, irg::ExplicitEpsilon{*o.eps});
    return irg::ModelParams(o.n, alpha, irg::CriticalScale{o.k_critical.value_or(1.0)});
}

irg::EnsembleSpec make_spec(const CommonOpts& o, std::set<irg::Statistic> stats) {
    irg::EnsembleSpec spec{make_params(o)};
    spec.replicas = o.replicas;
    spec.master_seed = o.seed;
    spec.statistics = std::move(stats);
    spec.output_path = o.out;
    spec.sampler = o.sampler == "naive" ? irg::SamplerKind::naive : irg::SamplerKind::fast;
    spec.pinned_weights = o.pinned_weights;
    spec.threads = o.threads;
    return spec;
}

void emit_table(const irg::StatTable& t, const CommonOpts& o) {
    if (o.out.empty()) t.to_csv(std::cout);
    // when --out is set, run_ensemble already wrote the file
}

int run_generate(const CommonOpts& o, std::size_t coarse_block) {
    auto params = make_params(o);
    const std::uint64_t wseed =
        irg::seeding::derive_substream(o.seed, 0, irg::StreamPurpose::weights);
    const std::uint64_t gseed =
        irg::seeding::derive_substream(o.seed, 0, irg::StreamPurpose::graph);
    auto weights = irg::heavytail::sample_weights(o.n, params.alpha, wseed);
    auto graph = o.sampler == "naive"
                     ? irg::graphgen::sample_graph(params, weights, gseed)
                     : irg::graphgen::sample_graph_fast(params, weights, gseed);
    if (coarse_block > 1) {
        auto [cg, cw] = irg::graphgen::coarse_grain(graph, weights, coarse_block);
        graph = std::move(cg);
        weights = std::move(cw);
    }
    if (o.out.empty()) {
        irg::graphgen::write_edge_list(std::cout, graph);
    } else {
        std::ofstream os(o.out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + o.out);
        irg::graphgen::write_edge_list(os, graph);
        std::ofstream ws(o.out + ".weights.csv", std::ios::binary);
        irg::graphgen::write_weights_csv(ws, weights);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inhomogeneous random graph ensemble simulator"};
    app.set_version_flag("--version", std::string("irgsim ") + irg::kVersion);
    app.require_subcommand(1);

    CommonOpts common;

    auto* c_generate = app.add_subcommand("generate", "emit one graph as an edge list");
    std::size_t gen_block = 1;
    add_common(c_generate, common);
    c_generate->add_option("--block-size", gen_block,
                           "coarse-grain the sample into blocks of this size");

    auto* c_degree = app.add_subcommand("degree", "degree statistics over an ensemble");
    add_common(c_degree, common);

    auto* c_motifs =
        app.add_subcommand("motifs", "degree/wedge/triangle statistics over an ensemble");
    add_common(c_motifs, common);

    auto* c_dust = app.add_subcommand("dust-scan", "isolated-node scan over a (k,n) grid");
    add_common(c_dust, common);
    std::vector<double> dust_k{0.05, 3.0};
    std::vector<std::size_t> dust_n{500, 2000, 8000};
    c_dust->add_option("--k-grid", dust_k, "critical-scale prefactors");
    c_dust->add_option("--n-grid", dust_n, "increasing graph sizes");

    auto* c_joint =
        app.add_subcommand("joint", "joint degree observations of two fixed vertices");
    add_common(c_joint, common);
    std::pair<std::uint32_t, std::uint32_t> joint_nodes{0, 1};
    c_joint->add_option("--nodes", joint_nodes, "pair of observed vertices (0-based)");
    std::vector<double> pgf_flat;
    c_joint->add_option("--pgf-grid", pgf_flat,
                        "flat list t1 s1 t2 s2 ... of PGF evaluation points");

    auto* c_coarse = app.add_subcommand("coarse-grain",
                                        "block-renormalization statistics over an ensemble");
    add_common(c_coarse, common);
    std::size_t coarse_block = 2;
    c_coarse->add_option("--block-size", coarse_block, "block size (must divide n)");

    auto* c_verify = app.add_subcommand("verify", "run the acceptance-criteria suite");
    std::string verify_level = "full";
    std::string verify_out;
    std::string verify_workdir = "verify-work";
    unsigned verify_threads = 0;
    c_verify->add_option("--level", verify_level, "fast | full")
        ->check(CLI::IsMember({"fast", "full"}));
    c_verify->add_option("--out", verify_out, "write the JSON report here");
    c_verify->add_option("--workdir", verify_workdir, "scratch dir for data files");
    c_verify->add_option("--threads", verify_threads,
                         "worker threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);

        if (!common.config.empty()) {
            CLI::App* sub = app.get_subcommands().empty() ? nullptr
                                                          : app.get_subcommands().front();
            CommonOpts merged;
            apply_config(common.config, merged);
            auto given = [&](const std::string& flag) {
                return sub != nullptr && sub->count(flag) > 0;
            };
            // Any flag typed on the command line overrides the file value.
            if (given("--n")) merged.n = common.n;
            if (given("--alpha")) merged.alpha = common.alpha;
            if (given("--eps")) merged.eps = common.eps;
            if (given("--k-critical")) merged.k_critical = common.k_critical;
            if (given("--replicas")) merged.replicas = common.replicas;
            if (given("--seed")) merged.seed = common.seed;
            if (given("--out")) merged.out = common.out;
            if (given("--threads")) merged.threads = common.threads;
            if (given("--sampler")) merged.sampler = common.sampler;
            if (given("--pinned-weights")) merged.pinned_weights = common.pinned_weights;
            merged.config = common.config;
            common = merged;
        }

        if (c_generate->parsed()) return run_generate(common, gen_block);

        if (c_degree->parsed()) {
            auto t = irg::run_ensemble(make_spec(common, {irg::Statistic::degree}));
            emit_table(t, common);
            return 0;
        }
        if (c_motifs->parsed()) {
            auto t = irg::run_ensemble(make_spec(
                common, {irg::Statistic::degree, irg::Statistic::wedges,
                         irg::Statistic::triangles}));
            emit_table(t, common);
            return 0;
        }
        if (c_dust->parsed()) {
            auto t = irg::experiment_dust_scan(irg::TailIndex(common.alpha), dust_k, dust_n,
                                               common.replicas, common.seed, common.threads);
            if (!common.out.empty()) t.write_csv_file(common.out);
            else t.to_csv(std::cout);
            return 0;
        }
        if (c_joint->parsed()) {
            auto spec = make_spec(common, {irg::Statistic::joint_degree});
            spec.joint_nodes = joint_nodes;
            if (pgf_flat.size() % 2 != 0) {
                throw std::invalid_argument("--pgf-grid needs an even number of values");
            }
            for (std::size_t i = 0; i + 1 < pgf_flat.size(); i += 2) {
                spec.pgf_grid.emplace_back(pgf_flat[i], pgf_flat[i + 1]);
            }
            auto t = irg::run_ensemble(spec);
            emit_table(t, common);
            return 0;
        }
        if (c_coarse->parsed()) {
            auto spec = make_spec(common, {irg::Statistic::degree, irg::Statistic::coarse_grain});
            spec.coarse_block = coarse_block;
            auto t = irg::run_ensemble(spec);
            emit_table(t, common);
            return 0;
        }
        if (c_verify->parsed()) {
            unsigned threads = verify_threads == 0
                                   ? std::max(1u, std::thread::hardware_concurrency())
                                   : verify_threads;
            auto level = verify_level == "fast" ? irg::verify::Level::fast
                                                : irg::verify::Level::full;
            auto report = irg::verify::run(level, threads, verify_workdir, &std::cerr);
            auto j = irg::verify::to_json(report);
            if (!verify_out.empty()) {
                std::ofstream os(verify_out, std::ios::binary);
                if (!os) throw std::runtime_error("cannot open " + verify_out);
                os << j.dump(2) << "\n";
            } else {
                std::cout << j.dump(2) << "\n";
            }
            return report.all_pass ? 0 : 2;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
