#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "irg/graphgen.hpp"
#include "irg/heavytail.hpp"
#include "irg/motifs.hpp"

using namespace irg;
using namespace irg::motifs;

namespace {

GraphSample manual_graph(std::size_t n,
                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    ModelParams params(n, TailIndex(0.5), ExplicitEpsilon{1e-3});
    return GraphSample{n, std::move(adj), params, 0, 0, 0};
}

GraphSample complete_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return manual_graph(n, edges);
}

GraphSample random_gnp(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.push_back({i, j});
        }
    }
    return manual_graph(n, edges);
}

std::int64_t brute_force_triangles(const GraphSample& g) {
    std::int64_t total = 0;
    for (std::uint32_t i = 0; i < g.n; ++i) {
        for (std::uint32_t j = i + 1; j < g.n; ++j) {
            for (std::uint32_t k = j + 1; k < g.n; ++k) {
                if (g.has_edge(i, j) && g.has_edge(i, k) && g.has_edge(j, k)) ++total;
            }
        }
    }
    return total;
}

}  // namespace

TEST_CASE("degree sequence: edge cases and the handshake identity") {
    auto empty = manual_graph(5, {});
    auto d = degree_sequence(empty);
    for (auto x : d.degree) CHECK(x == 0);
    CHECK(d.mean() == 0.0);

    auto k4 = complete_graph(4);
    for (auto x : degree_sequence(k4).degree) CHECK(x == 3);

    auto g = random_gnp(200, 0.05, 17);
    auto rec = degree_sequence(g);
    std::uint64_t sum = 0;
    for (auto x : rec.degree) sum += x;
    CHECK(sum == 2 * g.edge_count());
    CHECK(sum % 2 == 0);
}

TEST_CASE("empirical degree ccdf support points") {
    auto g = manual_graph(4, {{0, 1}, {0, 2}, {0, 3}});  // star: degrees 3,1,1,1
    auto ccdf = degree_sequence(g).empirical_ccdf();
    REQUIRE(ccdf.size() == 2);
    CHECK(ccdf[0].first == 1);
    CHECK(ccdf[0].second == doctest::Approx(0.25));
    CHECK(ccdf[1].first == 3);
    CHECK(ccdf[1].second == 0.0);
}

TEST_CASE("wedge counts in both conventions") {
    auto star = manual_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(wedge_count(star, 0, WedgeConvention::definition) == 6);
    CHECK(wedge_count(star, 0, WedgeConvention::theorem) == 12);
    CHECK(wedge_count(star, 1, WedgeConvention::definition) == 0);

    auto iso = manual_graph(3, {});
    CHECK(wedge_count(iso, 0, WedgeConvention::definition) == 0);
    CHECK(wedge_count(iso, 0, WedgeConvention::theorem) == 0);

    auto g = random_gnp(100, 0.07, 5);
    for (std::uint32_t i = 0; i < 100; i += 7) {
        CHECK(wedge_count(g, i, WedgeConvention::theorem) ==
              2 * wedge_count(g, i, WedgeConvention::definition));
    }
    CHECK_THROWS_AS(wedge_count(g, 100, WedgeConvention::definition),
                    std::invalid_argument);
}

TEST_CASE("wedge identity: sum over nodes equals sum of C(d,2)") {
    auto g = random_gnp(150, 0.04, 99);
    auto deg = degree_sequence(g);
    std::int64_t via_wedges = 0, via_degrees = 0;
    for (std::uint32_t i = 0; i < g.n; ++i) {
        via_wedges += wedge_count(g, i, WedgeConvention::definition);
        std::int64_t d = deg.degree[i];
        via_degrees += d * (d - 1) / 2;
    }
    CHECK(via_wedges == via_degrees);
}

TEST_CASE("triangle counts: canonical small cases") {
    auto tri = manual_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto tc = triangle_counts(tri);
    CHECK(tc.total == 1);
    CHECK(tc.per_node_x3 == std::vector<std::int64_t>{1, 1, 1});
    CHECK(tc.per_node(0) == doctest::Approx(1.0 / 3.0));

    auto k4 = complete_graph(4);
    auto tc4 = triangle_counts(k4);
    CHECK(tc4.total == 4);
    for (auto x : tc4.per_node_x3) CHECK(x == 3);

    auto empty = manual_graph(6, {});
    CHECK(triangle_counts(empty).total == 0);
}

TEST_CASE("triangle counts match brute force") {
    auto g = random_gnp(200, 0.05, 31);
    auto tc = triangle_counts(g);
    CHECK(tc.total == brute_force_triangles(g));
    std::int64_t per_node_sum = 0;
    for (auto x : tc.per_node_x3) per_node_sum += x;
    CHECK(per_node_sum == 3 * tc.total);

    // a small corpus across densities, n <= 50
    std::mt19937_64 seed_gen(2024);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 5 + static_cast<std::size_t>(seed_gen() % 46);
        double p = 0.02 + 0.3 * static_cast<double>(seed_gen() % 100) / 100.0;
        auto h = random_gnp(n, p, seed_gen());
        auto counts = triangle_counts(h);
        CHECK(counts.total == brute_force_triangles(h));
        std::int64_t s = 0;
        for (auto x : counts.per_node_x3) s += x;
        CHECK(s == 3 * counts.total);
    }
}

TEST_CASE("triangle counts on a heavy-tailed ensemble sample") {
    TailIndex alpha(0.5);
    auto w = heavytail::sample_weights(300, alpha, 8);
    ModelParams params(300, alpha, CriticalScale{1.0});
    auto g = graphgen::sample_graph_fast(params, w, 80);
    CHECK(triangle_counts(g).total == brute_force_triangles(g));
}

TEST_CASE("isolated node count") {
    CHECK(isolated_count(manual_graph(7, {})) == 7);
    CHECK(isolated_count(complete_graph(5)) == 0);
    CHECK(isolated_count(manual_graph(5, {{1, 3}})) == 3);
}

TEST_CASE("motif record bundles the per-graph statistics") {
    auto g = manual_graph(5, {{0, 1}, {0, 2}, {1, 2}});
    auto rec = motif_record(g);
    CHECK(rec.isolated == 2);
    CHECK(rec.triangles.total == 1);
    CHECK(rec.wedges_definition == std::vector<std::int64_t>{1, 1, 1, 0, 0});
}

TEST_CASE("hill estimator: synthetic Pareto ground truth") {
    auto draw = [](double alpha, std::size_t n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::vector<double> xs(n);
        for (auto& x : xs) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            x = std::pow(1.0 - u, -1.0 / alpha);
        }
        return xs;
    };
    CHECK(std::abs(hill_estimator(draw(1.0, 100000, 1), 1000) - 1.0) <= 0.1);
    CHECK(std::abs(hill_estimator(draw(0.5, 100000, 2), 1000) - 0.5) <= 0.05);

    CHECK_THROWS_AS(hill_estimator(std::vector<double>(100, 3.0), 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(hill_estimator({1.0, -2.0, 3.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(hill_estimator({1.0, 2.0}, 2), std::invalid_argument);
}

TEST_CASE("empirical joint PGF: degenerate and exact cases") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> zeros(50, {0, 0});
    auto est = empirical_joint_pgf(zeros, 0.5, 0.5);
    CHECK(est.value == 1.0);
    CHECK(est.standard_error == 0.0);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> mixed{{3, 1}, {0, 7}, {2, 2}};
    auto at_one = empirical_joint_pgf(mixed, 1.0, 1.0);
    CHECK(at_one.value == 1.0);

    CHECK_THROWS_AS(empirical_joint_pgf({}, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(empirical_joint_pgf(mixed, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(empirical_joint_pgf(mixed, 0.5, 1.5), std::invalid_argument);
}

TEST_CASE("empirical joint PGF detects the degree dependence") {
    // joint PGF of two observed vertices exceeds the product of marginals
    TailIndex alpha(0.5);
    ModelParams params(1000, alpha, CriticalScale{1.0});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> obs;
    std::vector<double> xt, xs;
    const std::size_t reps = 1500;
    for (std::uint64_t r = 0; r < reps; ++r) {
        auto w = heavytail::sample_weights(1000, alpha, 400000 + r);
        auto g = graphgen::sample_graph_fast(params, w, 900000 + r);
        obs.push_back({static_cast<std::uint32_t>(g.adj[0].size()),
                       static_cast<std::uint32_t>(g.adj[1].size())});
    }
    auto joint = empirical_joint_pgf(obs, 0.5, 0.5);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> m1, m2;
    for (auto [a, b] : obs) {
        m1.push_back({a, 0});
        m2.push_back({0, b});
    }
    auto g1 = empirical_joint_pgf(m1, 0.5, 1.0);
    auto g2 = empirical_joint_pgf(m2, 1.0, 0.5);
    double gap = joint.value - g1.value * g2.value;
    CHECK(gap > 3.0 * joint.standard_error);
}
