#include "irg/motifs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace irg {

double DegreeRecord::mean() const {
    if (degree.empty()) return 0.0;
    double sum = std::accumulate(degree.begin(), degree.end(), 0.0);
    return sum / static_cast<double>(degree.size());
}

std::uint32_t DegreeRecord::max() const {
    return degree.empty() ? 0u : *std::max_element(degree.begin(), degree.end());
}

std::vector<std::pair<std::uint32_t, double>> DegreeRecord::empirical_ccdf() const {
    std::vector<std::uint32_t> sorted = degree;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<std::uint32_t, double>> out;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out.emplace_back(sorted[i], static_cast<double>(sorted.size() - j) / n);
        i = j;
    }
    return out;
}

namespace motifs {

DegreeRecord degree_sequence(const GraphSample& g) {
    DegreeRecord rec;
    rec.degree.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        rec.degree[i] = static_cast<std::uint32_t>(g.adj[i].size());
    }
    return rec;
}

std::int64_t wedge_count(const GraphSample& g, std::uint32_t node, WedgeConvention conv) {
    if (node >= g.n) throw std::invalid_argument("wedge_count: node out of range");
    const std::int64_t d = static_cast<std::int64_t>(g.adj[node].size());
    const std::int64_t ordered = d * (d - 1);
    return conv == WedgeConvention::theorem ? ordered : ordered / 2;
}

TriangleCounts triangle_counts(const GraphSample& g) {
    // Forward intersection along a degree rank: each edge is examined from
    // its lower-rank endpoint and only higher-rank common neighbors are
    // counted, so every triangle shows up exactly once.
    const std::size_t n = g.n;
    std::vector<std::uint32_t> rank(n);
    {
        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            auto da = g.adj[a].size(), db = g.adj[b].size();
            return da != db ? da < db : a < b;
        });
        for (std::uint32_t r = 0; r < n; ++r) rank[order[r]] = r;
    }
    // Forward lists: neighbors of strictly higher rank, sorted by rank.
    std::vector<std::vector<std::uint32_t>> fwd(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        for (std::uint32_t u : g.adj[v]) {
            if (rank[u] > rank[v]) fwd[v].push_back(u);
        }
        std::sort(fwd[v].begin(), fwd[v].end(),
                  [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });
    }

    TriangleCounts out;
    out.per_node_x3.assign(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        for (std::uint32_t u : fwd[v]) {
            // triangles v-u-w with rank(v) < rank(u) < rank(w)
            auto it1 = fwd[v].begin();
            auto it2 = fwd[u].begin();
            while (it1 != fwd[v].end() && it2 != fwd[u].end()) {
                const std::uint32_t r1 = rank[*it1], r2 = rank[*it2];
                if (r1 < r2) {
                    ++it1;
                } else if (r2 < r1) {
                    ++it2;
                } else {
                    if (r1 > rank[u]) {
                        ++out.total;
                        ++out.per_node_x3[v];
                        ++out.per_node_x3[u];
                        ++out.per_node_x3[*it1];
                    }
                    ++it1;
                    ++it2;
                }
            }
        }
    }
    return out;
}

std::size_t isolated_count(const GraphSample& g) {
    std::size_t count = 0;
    for (const auto& nb : g.adj) {
        if (nb.empty()) ++count;
    }
    return count;
}

MotifRecord motif_record(const GraphSample& g) {
    MotifRecord rec;
    rec.wedges_definition.resize(g.n);
    for (std::uint32_t i = 0; i < g.n; ++i) {
        rec.wedges_definition[i] = wedge_count(g, i, WedgeConvention::definition);
    }
    rec.triangles = triangle_counts(g);
    rec.isolated = isolated_count(g);
    return rec;
}

double hill_estimator(std::vector<double> sample, std::size_t k) {
    if (k < 1 || k + 1 > sample.size()) {
        throw std::invalid_argument("hill_estimator: need 1 <= k < sample size");
    }
    for (double x : sample) {
        if (!(x > 0.0)) {
            throw std::invalid_argument("hill_estimator: sample must be positive");
        }
    }
    std::sort(sample.begin(), sample.end(), std::greater<>());
    const double pivot = sample[k];  // X_(k+1)
    double acc = 0.0;
    for (std::size_t m = 0; m < k; ++m) {
        acc += std::log(sample[m] / pivot);
    }
    acc /= static_cast<double>(k);
    if (!(acc > 0.0)) {
        throw std::invalid_argument("hill_estimator: degenerate tail (no variation)");
    }
    return 1.0 / acc;
}

PgfEstimate empirical_joint_pgf(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                                double t, double s) {
    if (pairs.empty()) {
        throw std::invalid_argument("empirical_joint_pgf: empty sample");
    }
    if (!(t > 0.0) || t > 1.0 || !(s > 0.0) || s > 1.0) {
        throw std::invalid_argument("empirical_joint_pgf: t, s must lie in (0,1]");
    }
    double sum = 0.0, sumsq = 0.0;
    for (const auto& [d1, d2] : pairs) {
        double v = std::pow(t, static_cast<double>(d1)) * std::pow(s, static_cast<double>(d2));
        sum += v;
        sumsq += v * v;
    }
    const double m = static_cast<double>(pairs.size());
    const double mean = sum / m;
    double var = (m > 1.0) ? std::max(0.0, (sumsq - m * mean * mean) / (m - 1.0)) : 0.0;
    return {mean, std::sqrt(var / m)};
}

}  // namespace motifs
}  // namespace irg
