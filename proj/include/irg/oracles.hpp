#pragma once

#include <cstdint>
#include <vector>

#include "irg/heavytail.hpp"
#include "irg/specfun.hpp"

// Independent analytic predictions for every statistic the simulator
// measures. All constants (Gamma(1-alpha), Gamma(-alpha/2), thresholds)
// are computed at call time from specfun, never hard-coded. Finite-n
// expectations are reduced analytically and then evaluated by quadrature,
// never by Monte Carlo, so simulator and oracle errors stay independent.

namespace irg::oracles {

// Laplace transform of a single weight, phi(lambda) = E[exp(-lambda W)],
// and its deficit 1 - phi(lambda). The deficit is computed cancellation-free
// (power series for small lambda), so its relative accuracy is uniform
// even where phi is within 1e-12 of 1.
double weight_laplace(double lambda, TailIndex alpha);
double weight_laplace_deficit(double lambda, TailIndex alpha);

// Laplace transform of the product W1 W2 at eps, via the exact product
// density alpha^2 t^{-alpha-1} log t on (1,inf).
double product_laplace(double eps, TailIndex alpha,
                       const specfun::QuadratureSpec& spec = {});

// E[D_n(i)] = (n-1) * (1 - product_laplace(eps)).
double expected_degree_exact(std::size_t n, double eps, TailIndex alpha,
                             const specfun::QuadratureSpec& spec = {});

// (n-1) * Gamma(1-alpha) * alpha * eps^alpha * log(1/eps); at the critical
// scale eps = n^{-1/alpha} this is Gamma(1-alpha) log(n) * (n-1)/n.
double expected_degree_asymptotic(std::size_t n, double eps, TailIndex alpha);

// Limiting degree law: mixed Poisson with rate Lambda = c W^alpha,
// c = Gamma(1-alpha). The mixing variable Y = c W^alpha is Pareto(1) on
// (c, inf), giving
//   pmf(0) = e^{-c} - c E1(c)
//   pmf(1) = c E1(c)
//   pmf(k) = (c / k!) Gamma(k-1; c)   for k >= 2.
class MixedPoissonLaw {
public:
    explicit MixedPoissonLaw(TailIndex alpha);

    double mixing_constant() const { return c_; }
    TailIndex alpha() const { return alpha_; }

    double pmf(std::uint64_t k) const;
    // P(D > k); the tail of the pmf sum telescopes to c/k up to factorially
    // small corrections, which are summed explicitly.
    double ccdf(std::uint64_t k) const;
    // Marginal PGF E[t^D] = e^{-lambda} - lambda E1(lambda), lambda = c(1-t).
    double pgf(double t) const;

private:
    TailIndex alpha_;
    double c_;
};

// Limiting joint PGF E[t^{D(i)} s^{D(j)}] of two distinct vertices, by 2-D
// quadrature of
//   exp(-c { (1-t)(1-s)[(x+y)^a - x^a - y^a] + (1-t) x^a + (1-s) y^a })
// against the product Pareto density.
double joint_pgf_limit(double t, double s, TailIndex alpha,
                       const specfun::QuadratureSpec& spec = {});

// Independence baseline E[t^{D(i)}] E[s^{D(j)}] for the same limit.
double joint_pgf_product(double t, double s, TailIndex alpha);

// Explicit upper bound on |joint - product| at t = 1-eta, s = 1-gamma:
//   c [ eta*gamma log(1 + 1/(c eta)) + eta*gamma log(1 + 1/(c gamma))
//       + (1/2) sum_{k>=2} 2^k/(k(k-1)) (eta gamma^k + eta^k gamma) ].
// The series requires eta, gamma < 1/2; arguments above 0.49 are rejected.
double joint_pgf_gap_bound(double eta, double gamma_, TailIndex alpha);

enum class MotifFormula {
    exact_factorized,  // the closed factorized integrals, with Gamma(-a/2; eps)
    asymptotic,        // the leading eps -> 0 form
};

// Per-node expected wedges (1/2-normalized definition convention):
//   exact_factorized: (n-1)(n-2)/4 * a^3 * [2/a - eps^{a/2} Gamma(-a/2;eps)]^2 * (2/a)
//   asymptotic:       (a^2 Gamma(-a/2)^2 / 2) * eps^a * n^2
double expected_wedges(std::size_t n, double eps, TailIndex alpha, MotifFormula mode);

// Per-node expected triangles (1/6-normalized):
//   exact_factorized: (n-1)(n-2) a^3 / 12 * [2/a - eps^{a/2} Gamma(-a/2;eps)]^3
//   asymptotic:       -(a^3/12) Gamma(-a/2)^3 eps^{3a/2} n^2
double expected_triangles(std::size_t n, double eps, TailIndex alpha, MotifFormula mode);

// -Gamma(-a/2)^3, the in-probability limit of 12 Delta_n / (a^3 n^{3/2}).
double triangle_limit_constant(TailIndex alpha);

// Validation route for the factorized formulas: direct 3-D quadrature of
//   a^3 iiint (1-e^{-eps xy})(1-e^{-eps xz})[(1-e^{-eps yz})] (xyz)^{-a-1}
// over the true domain [1,inf)^3 (CDF-substituted to the unit cube), times
// the same combinatorial prefactors. The factorized forms integrate over
// the full (A,B,C) box, which strictly contains the image of [1,inf)^3
// under A=xy, B=xz, C=yz; both values are reported wherever they disagree.
double expected_wedges_bruteforce(std::size_t n, double eps, TailIndex alpha,
                                  double rel_tol = 1e-6);
double expected_triangles_bruteforce(std::size_t n, double eps, TailIndex alpha,
                                     double rel_tol = 1e-6);

// E[N_0] in the factorized product form n * (E[e^{-eps W1 W2}])^{n-1}.
// This treats the n-1 non-edge indicators at a vertex as fully independent.
double dust_expectation(std::size_t n, double eps, TailIndex alpha,
                        const specfun::QuadratureSpec& spec = {});

// E[N_0] = n * E_W[ phi(eps W)^{n-1} ], conditioning on the shared weight of
// the candidate isolated vertex before factorizing over the others. This is
// the exact first moment; it dominates the product form (Jensen).
double dust_expectation_conditional(std::size_t n, double eps, TailIndex alpha,
                                    const specfun::QuadratureSpec& spec = {});

// Threshold constants of the dust phase transition:
//   k1* = (1/Gamma(1-alpha))^{1/alpha},
//   k2* = (1/(Gamma(1-alpha)(2-2^alpha)))^{1/alpha}.
// Note k2* > k1* for every alpha; the two one-sided statements overlap.
struct DustThresholds {
    double k1_star;
    double k2_star;
};
DustThresholds dust_thresholds(TailIndex alpha);

// Tauberian consistency: along a grid of eps decreasing to 0, compare
//   (1 - E[e^{-eps W}])      against Gamma(1-a) eps^a              (weight)
//   (1 - E[e^{-eps W1 W2}])  against Gamma(1-a) a eps^a log(1/eps) (product)
// and report the ratios. Points with |ratio-1| > 0.1 are flagged as outside
// the asymptotic regime; the check passes if |ratio-1| shrinks monotonically
// along the grid and the final point is within the tolerances.
struct KaramataPoint {
    double eps;
    double weight_ratio;
    double product_ratio;
    bool asymptotic_regime;
};
struct KaramataReport {
    std::vector<KaramataPoint> points;
    bool weight_pass;
    bool product_pass;
};
KaramataReport karamata_check(TailIndex alpha, const std::vector<double>& eps_grid,
                              double weight_tol = 1e-3, double product_tol = 2e-2);

}  // namespace irg::oracles
