#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "irg/heavytail.hpp"

// Sampling of the random graph ensemble: n vertices carry Pareto(alpha)
// weights, and each pair {i,j} is joined independently with probability
// 1 - exp(-eps * W_i * W_j).

namespace irg {

// Edge density parameter: either an explicit eps > 0 or the critical
// scaling eps = k * n^{-1/alpha}.
struct ExplicitEpsilon {
    double eps;
};
struct CriticalScale {
    double k;
};

struct ModelParams {
    std::size_t n;
    TailIndex alpha;
    std::variant<ExplicitEpsilon, CriticalScale> epsilon_rule;

    ModelParams(std::size_t n_, TailIndex alpha_, ExplicitEpsilon rule);
    ModelParams(std::size_t n_, TailIndex alpha_, CriticalScale rule);

    // Resolved eps; for the critical rule this is k * n^{-1/alpha} evaluated
    // in full precision at call time.
    double epsilon() const;
};

// One realization: a simple undirected graph in canonical form
// (per-vertex neighbor lists, sorted ascending) plus its provenance.
struct GraphSample {
    std::size_t n = 0;
    std::vector<std::vector<std::uint32_t>> adj;
    ModelParams params;
    std::uint64_t weight_seed = 0;
    std::uint64_t graph_seed = 0;
    std::uint64_t replica_id = 0;

    std::size_t edge_count() const;
    bool has_edge(std::uint32_t i, std::uint32_t j) const;
    // Throws std::logic_error if the sample is not a canonical simple graph.
    void validate() const;
};

namespace graphgen {

// p_ij = 1 - exp(-eps * w_i * w_j); requires w_i, w_j >= 1 and eps > 0.
double connection_prob(double w_i, double w_j, double eps);

// Reference sampler: one uniform variate per unordered pair, consumed in
// row-major order over i < j. Shared per-pair variates make the monotone
// coupling in eps testable.
GraphSample sample_graph(const ModelParams& params, const WeightVector& weights,
                         std::uint64_t graph_seed, std::uint64_t replica_id = 0);

// Skip-and-accept sampler over weights sorted descending: for each source,
// candidate targets advance by geometric skips under the current row bound
// q = p(w_src, w_candidate) and land with acceptance ratio p/q. Identical
// distribution to sample_graph, different (documented) variate stream.
GraphSample sample_graph_fast(const ModelParams& params, const WeightVector& weights,
                              std::uint64_t graph_seed, std::uint64_t replica_id = 0);

// Block renormalization: consecutive index blocks of size b (b must divide n),
// block weight = sum of constituent weights, blocks adjacent iff at least one
// cross edge existed. The returned params carry n/b vertices and the same
// resolved eps, pinned as explicit.
std::pair<GraphSample, WeightVector> coarse_grain(const GraphSample& graph,
                                                  const WeightVector& weights,
                                                  std::size_t block_size);

// Edge-list text format: header line
//   "# n=<n> alpha=<alpha> eps=<eps> weight_seed=<s> graph_seed=<s> replica=<r>"
// followed by one "i j" pair per line, 0-based, i < j.
void write_edge_list(std::ostream& os, const GraphSample& g);
GraphSample read_edge_list(std::istream& is);

// Weights as CSV "index,weight".
void write_weights_csv(std::ostream& os, const WeightVector& w);

}  // namespace graphgen
}  // namespace irg
