#include "irg/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace irg {
namespace {

double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void sort_adjacency(std::vector<std::vector<std::uint32_t>>& adj) {
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
}

}  // namespace

ModelParams::ModelParams(std::size_t n_, TailIndex alpha_, ExplicitEpsilon rule)
    : n(n_), alpha(alpha_), epsilon_rule(rule) {
    if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
    if (!(rule.eps > 0.0)) throw std::invalid_argument("ModelParams: eps must be > 0");
}

ModelParams::ModelParams(std::size_t n_, TailIndex alpha_, CriticalScale rule)
    : n(n_), alpha(alpha_), epsilon_rule(rule) {
    if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1");
    if (!(rule.k > 0.0)) throw std::invalid_argument("ModelParams: k must be > 0");
}

double ModelParams::epsilon() const {
    if (const auto* e = std::get_if<ExplicitEpsilon>(&epsilon_rule)) {
        return e->eps;
    }
    const auto& c = std::get<CriticalScale>(epsilon_rule);
    return c.k * std::pow(static_cast<double>(n), -1.0 / alpha.value());
}

std::size_t GraphSample::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj) deg_sum += nb.size();
    return deg_sum / 2;
}

bool GraphSample::has_edge(std::uint32_t i, std::uint32_t j) const {
    const auto& nb = adj[i];
    return std::binary_search(nb.begin(), nb.end(), j);
}

void GraphSample::validate() const {
    if (adj.size() != n) throw std::logic_error("GraphSample: adjacency size != n");
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& nb = adj[i];
        if (!std::is_sorted(nb.begin(), nb.end())) {
            throw std::logic_error("GraphSample: neighbor list not sorted");
        }
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw std::logic_error("GraphSample: duplicate neighbor");
        }
        for (std::uint32_t j : nb) {
            if (j >= n) throw std::logic_error("GraphSample: neighbor out of range");
            if (j == i) throw std::logic_error("GraphSample: self-loop");
            if (!has_edge(j, i)) throw std::logic_error("GraphSample: asymmetric edge");
        }
    }
}

namespace graphgen {

double connection_prob(double w_i, double w_j, double eps) {
    if (!(w_i >= 1.0) || !(w_j >= 1.0)) {
        throw std::invalid_argument("connection_prob: weights must be >= 1");
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("connection_prob: eps must be > 0");
    }
    return -std::expm1(-eps * w_i * w_j);
}

GraphSample sample_graph(const ModelParams& params, const WeightVector& weights,
                         std::uint64_t graph_seed, std::uint64_t replica_id) {
    if (weights.n() != params.n) {
        throw std::invalid_argument("sample_graph: weights.n must equal params.n");
    }
    const std::size_t n = params.n;
    const double eps = params.epsilon();
    std::mt19937_64 rng(graph_seed);
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const double wi = weights.values[i];
        for (std::uint32_t j = i + 1; j < n; ++j) {
            double u = uniform53(rng);
            if (u < connection_prob(wi, weights.values[j], eps)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    sort_adjacency(adj);
    return GraphSample{n, std::move(adj), params, weights.seed, graph_seed, replica_id};
}

GraphSample sample_graph_fast(const ModelParams& params, const WeightVector& weights,
                              std::uint64_t graph_seed, std::uint64_t replica_id) {
    if (weights.n() != params.n) {
        throw std::invalid_argument("sample_graph_fast: weights.n must equal params.n");
    }
    const std::size_t n = params.n;
    const double eps = params.epsilon();

    // Vertex order of descending weight; ties broken by original index.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        double wa = weights.values[a], wb = weights.values[b];
        return wa != wb ? wa > wb : a < b;
    });
    std::vector<double> w(n);
    for (std::size_t r = 0; r < n; ++r) w[r] = weights.values[order[r]];

    std::mt19937_64 rng(graph_seed);
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        std::size_t b = a + 1;
        while (b < n) {
            // Row bound: weights are descending, so q dominates every
            // pair probability from position b onward.
            double q = connection_prob(w[a], w[b], eps);
            if (!(q > 0.0)) break;  // rest of the row is unreachable
            if (q < 1.0) {
                double u = uniform53(rng);
                // Failures before the first success of a Bernoulli(q) walk.
                double skip = std::floor(std::log1p(-u) / std::log1p(-q));
                if (skip >= static_cast<double>(n - b)) break;
                b += static_cast<std::size_t>(skip);
            }
            double p = connection_prob(w[a], w[b], eps);
            if (uniform53(rng) * q < p) {
                std::uint32_t x = order[a], y = order[b];
                adj[x].push_back(y);
                adj[y].push_back(x);
            }
            ++b;
        }
    }
    sort_adjacency(adj);
    return GraphSample{n, std::move(adj), params, weights.seed, graph_seed, replica_id};
}

std::pair<GraphSample, WeightVector> coarse_grain(const GraphSample& graph,
                                                  const WeightVector& weights,
                                                  std::size_t block_size) {
    const std::size_t n = graph.n;
    if (block_size < 1 || n % block_size != 0) {
        throw std::invalid_argument("coarse_grain: block size must divide n");
    }
    if (weights.n() != n) {
        throw std::invalid_argument("coarse_grain: weights.n must equal graph.n");
    }
    const std::size_t nb = n / block_size;

    std::vector<double> block_weights(nb, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        block_weights[i / block_size] += weights.values[i];
    }

    std::vector<std::vector<std::uint32_t>> adj(nb);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t bi = i / static_cast<std::uint32_t>(block_size);
        for (std::uint32_t j : graph.adj[i]) {
            const std::uint32_t bj = j / static_cast<std::uint32_t>(block_size);
            if (bi != bj) adj[bi].push_back(bj);
        }
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }

    ModelParams coarse_params(nb, graph.params.alpha,
                              ExplicitEpsilon{graph.params.epsilon()});
    GraphSample out{nb, std::move(adj), coarse_params, graph.weight_seed,
                    graph.graph_seed, graph.replica_id};
    return {std::move(out),
            WeightVector(std::move(block_weights), weights.alpha, weights.seed)};
}

void write_edge_list(std::ostream& os, const GraphSample& g) {
    std::ostringstream header;
    header.precision(17);
    header << "# n=" << g.n << " alpha=" << g.params.alpha.value()
           << " eps=" << g.params.epsilon() << " weight_seed=" << g.weight_seed
           << " graph_seed=" << g.graph_seed << " replica=" << g.replica_id;
    os << header.str() << "\n";
    for (std::uint32_t i = 0; i < g.n; ++i) {
        for (std::uint32_t j : g.adj[i]) {
            if (i < j) os << i << " " << j << "\n";
        }
    }
}

GraphSample read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# n=", 0) != 0) {
        throw std::invalid_argument("read_edge_list: missing header line");
    }
    auto field = [&line](const std::string& key) {
        auto pos = line.find(key + "=");
        if (pos == std::string::npos) {
            throw std::invalid_argument("read_edge_list: header missing " + key);
        }
        pos += key.size() + 1;
        auto end = line.find(' ', pos);
        return line.substr(pos, end == std::string::npos ? end : end - pos);
    };
    const std::size_t n = std::stoull(field("n"));
    const double alpha = std::stod(field("alpha"));
    const double eps = std::stod(field("eps"));
    const std::uint64_t wseed = std::stoull(field("weight_seed"));
    const std::uint64_t gseed = std::stoull(field("graph_seed"));
    const std::uint64_t replica = std::stoull(field("replica"));

    std::vector<std::vector<std::uint32_t>> adj(n);
    std::uint32_t i, j;
    while (is >> i >> j) {
        if (i >= n || j >= n || i >= j) {
            throw std::invalid_argument("read_edge_list: bad edge line");
        }
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    sort_adjacency(adj);
    ModelParams params(n, TailIndex(alpha), ExplicitEpsilon{eps});
    return GraphSample{n, std::move(adj), params, wseed, gseed, replica};
}

void write_weights_csv(std::ostream& os, const WeightVector& w) {
    os << "index,weight\n";
    os.precision(17);
    for (std::size_t i = 0; i < w.n(); ++i) {
        os << i << "," << w.values[i] << "\n";
    }
}

}  // namespace graphgen
}  // namespace irg
