#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "irg/graphgen.hpp"

// Per-node and global graph statistics: degrees, wedges, triangles,
// isolated nodes, tail and PGF estimators.

namespace irg {

struct DegreeRecord {
    std::vector<std::uint32_t> degree;

    double mean() const;
    std::uint32_t max() const;
    // Support points of the empirical CCDF: (d, fraction of nodes with degree > d)
    // at each distinct observed degree d, ascending.
    std::vector<std::pair<std::uint32_t, double>> empirical_ccdf() const;
};

// Per-node triangle counts are stored as integers T_i = "number of triangles
// containing i" (three times the 1/6-double-sum value), so that the identity
// sum_i T_i == 3 * total stays exact. Divide by 3 only when reporting.
struct TriangleCounts {
    std::vector<std::int64_t> per_node_x3;
    std::int64_t total = 0;

    double per_node(std::size_t i) const { return static_cast<double>(per_node_x3[i]) / 3.0; }
};

struct MotifRecord {
    std::vector<std::int64_t> wedges_definition;  // C(D_i, 2) per node
    TriangleCounts triangles;
    std::size_t isolated = 0;
};

// Two wedge conventions coexist: the 1/2-normalized double sum gives
// D(D-1)/2, the limit-theorem form uses D(D-1). Callers must pick one.
enum class WedgeConvention { definition, theorem };

namespace motifs {

DegreeRecord degree_sequence(const GraphSample& g);

std::int64_t wedge_count(const GraphSample& g, std::uint32_t node, WedgeConvention conv);

// Neighbor-list intersection over edges, oriented by degree rank.
// Exact integer counts.
TriangleCounts triangle_counts(const GraphSample& g);

std::size_t isolated_count(const GraphSample& g);

MotifRecord motif_record(const GraphSample& g);

// Hill tail-index estimate from the top k order statistics:
// 1 / [ (1/k) sum_{m=1..k} log(X_(m) / X_(k+1)) ].
// Rejects nonpositive samples, k >= size, and degenerate (constant) tails.
double hill_estimator(std::vector<double> sample, std::size_t k);

// Sample mean of t^{d1} s^{d2} over observed degree pairs, with its
// standard error. The marginal version is obtained at s = 1.
struct PgfEstimate {
    double value;
    double standard_error;
};
PgfEstimate empirical_joint_pgf(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                double t, double s);

}  // namespace motifs
}  // namespace irg
