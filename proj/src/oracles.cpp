#include "irg/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace irg::oracles {
namespace {

using specfun::QuadratureSpec;

// E[g(W)] = int_0^1 g(u^{-1/alpha}) du  (inverse-CDF substitution; smooth
// whenever g decays at infinity, which holds for every Laplace-type
// integrand used here).
double pareto_expect_1d(const std::function<double(double)>& g, double alpha,
                        const QuadratureSpec& spec) {
    auto h = [&g, alpha](double u) { return g(std::pow(u, -1.0 / alpha)); };
    return specfun::integrate_finite(h, 0.0, 1.0, spec);
}

double pareto_expect_2d(const std::function<double(double, double)>& g, double alpha,
                        const QuadratureSpec& spec) {
    QuadratureSpec inner = spec;
    inner.rel_tol = spec.rel_tol * 0.1;
    inner.abs_tol = spec.abs_tol * 0.1;
    auto outer = [&](double u) {
        double x = std::pow(u, -1.0 / alpha);
        return specfun::integrate_finite(
            [&g, x, alpha](double v) { return g(x, std::pow(v, -1.0 / alpha)); }, 0.0,
            1.0, inner);
    };
    return specfun::integrate_finite(outer, 0.0, 1.0, spec);
}

double pareto_expect_3d(const std::function<double(double, double, double)>& g,
                        double alpha, double rel_tol) {
    QuadratureSpec outer_spec{rel_tol, 1e-14, 2000};
    QuadratureSpec mid_spec{rel_tol * 0.2, 1e-15, 2000};
    QuadratureSpec inner_spec{rel_tol * 0.04, 1e-16, 2000};
    const double inv_a = 1.0 / alpha;
    auto outer = [&](double u) {
        double x = std::pow(u, -inv_a);
        auto mid = [&](double v) {
            double y = std::pow(v, -inv_a);
            return specfun::integrate_finite(
                [&](double w) { return g(x, y, std::pow(w, -inv_a)); }, 0.0, 1.0,
                inner_spec);
        };
        return specfun::integrate_finite(mid, 0.0, 1.0, mid_spec);
    };
    return specfun::integrate_finite(outer, 0.0, 1.0, outer_spec);
}

// [2/a - eps^{a/2} Gamma(-a/2; eps)], the factorized one-dimensional factor
// shared by the wedge and triangle closed forms.
double factorized_motif_integral(double eps, double a) {
    double g = specfun::upper_incomplete_gamma(-0.5 * a, eps);
    return 2.0 / a - std::pow(eps, 0.5 * a) * g;
}

}  // namespace

double weight_laplace_deficit(double lambda, TailIndex alpha) {
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("weight_laplace_deficit: lambda must be >= 0");
    }
    const double a = alpha.value();
    if (lambda == 0.0) return 0.0;
    if (lambda > 700.0) return 1.0;  // e^{-lambda} underflows; phi is 0
    if (lambda <= 1.0) {
        // 1 - phi(lambda) = Gamma(1-a) lambda^a + a sum_{k>=1} (-lambda)^k / (k! (k-a))
        double sum = 0.0;
        double pw = 1.0;  // (-lambda)^k / k!
        for (int k = 1; k <= 60; ++k) {
            pw *= -lambda / k;
            double term = pw / (k - a);
            sum += term;
            if (std::abs(term) < 1e-20) break;
        }
        return specfun::gamma_fn(1.0 - a) * std::pow(lambda, a) + a * sum;
    }
    // phi(lambda) = a lambda^a Gamma(-a; lambda); no cancellation once the
    // deficit is order one.
    double phi = a * std::pow(lambda, a) * specfun::upper_incomplete_gamma(-a, lambda);
    return std::min(1.0, std::max(0.0, 1.0 - phi));
}

double weight_laplace(double lambda, TailIndex alpha) {
    return 1.0 - weight_laplace_deficit(lambda, alpha);
}

double product_laplace(double eps, TailIndex alpha, const QuadratureSpec& spec) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("product_laplace: eps must be > 0");
    }
    const double a = alpha.value();
    // Exact product density alpha^2 t^{-alpha-1} log t on (1, inf).
    auto f = [eps, a](double t) {
        return std::exp(-eps * t) * a * a * std::pow(t, -a - 1.0) * std::log(t);
    };
    return specfun::integrate_1d(f, 1.0, spec);
}

double expected_degree_exact(std::size_t n, double eps, TailIndex alpha,
                             const QuadratureSpec& spec) {
    if (n < 1) throw std::invalid_argument("expected_degree_exact: n must be >= 1");
    return static_cast<double>(n - 1) * (1.0 - product_laplace(eps, alpha, spec));
}

double expected_degree_asymptotic(std::size_t n, double eps, TailIndex alpha) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw std::invalid_argument("expected_degree_asymptotic: eps must be in (0,1)");
    }
    const double a = alpha.value();
    return static_cast<double>(n - 1) * specfun::gamma_fn(1.0 - a) * a *
           std::pow(eps, a) * std::log(1.0 / eps);
}

MixedPoissonLaw::MixedPoissonLaw(TailIndex alpha)
    : alpha_(alpha), c_(specfun::gamma_fn(1.0 - alpha.value())) {}

double MixedPoissonLaw::pmf(std::uint64_t k) const {
    if (k == 0) return std::exp(-c_) - c_ * specfun::exp_integral_e1(c_);
    if (k == 1) return c_ * specfun::exp_integral_e1(c_);
    // (c/k!) Gamma(k-1; c) = c Q(k-1, c) / (k (k-1))
    const double kk = static_cast<double>(k);
    return c_ * specfun::gamma_q(kk - 1.0, c_) / (kk * (kk - 1.0));
}

double MixedPoissonLaw::ccdf(std::uint64_t k) const {
    if (k == 0) return 1.0 - pmf(0);
    // sum_{m>k} c/(m(m-1)) telescopes to c/k; subtract the factorially small
    // regularized-lower corrections P(m-1, c) explicitly until they vanish.
    const double kk = static_cast<double>(k);
    double corr = 0.0;
    for (std::uint64_t m = k + 1; m <= k + 1000; ++m) {
        const double mm = static_cast<double>(m);
        double p = specfun::gamma_p(mm - 1.0, c_);
        if (p <= 0.0) break;
        double term = c_ * p / (mm * (mm - 1.0));
        corr += term;
        if (term < 1e-22 * (c_ / kk)) break;
    }
    return c_ / kk - corr;
}

double MixedPoissonLaw::pgf(double t) const {
    if (!(t > 0.0) || t > 1.0) {
        throw std::invalid_argument("MixedPoissonLaw::pgf: t must lie in (0,1]");
    }
    if (t == 1.0) return 1.0;
    const double lambda = c_ * (1.0 - t);
    return std::exp(-lambda) - lambda * specfun::exp_integral_e1(lambda);
}

double joint_pgf_limit(double t, double s, TailIndex alpha, const QuadratureSpec& spec) {
    if (!(t > 0.0) || t > 1.0 || !(s > 0.0) || s > 1.0) {
        throw std::invalid_argument("joint_pgf_limit: t, s must lie in (0,1]");
    }
    const double a = alpha.value();
    const double c = specfun::gamma_fn(1.0 - a);
    const double eta = 1.0 - t, gam = 1.0 - s;
    auto f = [=](double x, double y) {
        double xa = std::pow(x, a), ya = std::pow(y, a);
        double cross = std::pow(x + y, a) - xa - ya;  // <= 0
        return std::exp(-c * (eta * gam * cross + eta * xa + gam * ya));
    };
    return pareto_expect_2d(f, a, spec);
}

double joint_pgf_product(double t, double s, TailIndex alpha) {
    MixedPoissonLaw law(alpha);
    return law.pgf(t) * law.pgf(s);
}

double joint_pgf_gap_bound(double eta, double gamma_, TailIndex alpha) {
    if (!(eta > 0.0) || eta > 0.49 || !(gamma_ > 0.0) || gamma_ > 0.49) {
        throw std::invalid_argument(
            "joint_pgf_gap_bound: eta, gamma must lie in (0, 0.49]");
    }
    const double c = specfun::gamma_fn(1.0 - alpha.value());
    double series = 0.0;
    double pow_eta = eta, pow_gam = gamma_;  // eta^k, gamma^k
    double pow2 = 2.0;                       // 2^k
    for (int k = 2; k <= 4000; ++k) {
        pow_eta *= eta;
        pow_gam *= gamma_;
        pow2 *= 2.0;
        double term = pow2 / (static_cast<double>(k) * (k - 1.0)) *
                      (eta * pow_gam + pow_eta * gamma_);
        series += term;
        if (term < 1e-18 * (1.0 + series)) break;
    }
    const double logs = eta * gamma_ * std::log1p(1.0 / (c * eta)) +
                        eta * gamma_ * std::log1p(1.0 / (c * gamma_));
    return c * (logs + 0.5 * series);
}

double expected_wedges(std::size_t n, double eps, TailIndex alpha, MotifFormula mode) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw std::invalid_argument("expected_wedges: eps must be in (0,1)");
    }
    const double a = alpha.value();
    const double nn = static_cast<double>(n);
    if (mode == MotifFormula::asymptotic) {
        double g = specfun::gamma_fn(-0.5 * a);
        return 0.5 * a * a * g * g * std::pow(eps, a) * nn * nn;
    }
    double ia = factorized_motif_integral(eps, a);
    return (nn - 1.0) * (nn - 2.0) / 4.0 * a * a * a * ia * ia * (2.0 / a);
}

double expected_triangles(std::size_t n, double eps, TailIndex alpha, MotifFormula mode) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw std::invalid_argument("expected_triangles: eps must be in (0,1)");
    }
    const double a = alpha.value();
    const double nn = static_cast<double>(n);
    if (mode == MotifFormula::asymptotic) {
        return a * a * a / 12.0 * triangle_limit_constant(alpha) *
               std::pow(eps, 1.5 * a) * nn * nn;
    }
    double ia = factorized_motif_integral(eps, a);
    return (nn - 1.0) * (nn - 2.0) * a * a * a / 12.0 * ia * ia * ia;
}

double triangle_limit_constant(TailIndex alpha) {
    double g = specfun::gamma_fn(-0.5 * alpha.value());
    return -g * g * g;
}

double expected_wedges_bruteforce(std::size_t n, double eps, TailIndex alpha,
                                  double rel_tol) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("expected_wedges_bruteforce: eps must be > 0");
    }
    const double a = alpha.value();
    auto g = [eps](double x, double y, double z) {
        return (-std::expm1(-eps * x * y)) * (-std::expm1(-eps * x * z));
    };
    double mean = pareto_expect_3d(g, a, rel_tol);
    const double nn = static_cast<double>(n);
    return (nn - 1.0) * (nn - 2.0) / 2.0 * mean;
}

double expected_triangles_bruteforce(std::size_t n, double eps, TailIndex alpha,
                                     double rel_tol) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("expected_triangles_bruteforce: eps must be > 0");
    }
    const double a = alpha.value();
    auto g = [eps](double x, double y, double z) {
        return (-std::expm1(-eps * x * y)) * (-std::expm1(-eps * x * z)) *
               (-std::expm1(-eps * y * z));
    };
    double mean = pareto_expect_3d(g, a, rel_tol);
    const double nn = static_cast<double>(n);
    return (nn - 1.0) * (nn - 2.0) / 6.0 * mean;
}

double dust_expectation(std::size_t n, double eps, TailIndex alpha,
                        const QuadratureSpec& spec) {
    if (n < 1) throw std::invalid_argument("dust_expectation: n must be >= 1");
    double laplace = product_laplace(eps, alpha, spec);
    return static_cast<double>(n) *
           std::exp(static_cast<double>(n - 1) * std::log(laplace));
}

double dust_expectation_conditional(std::size_t n, double eps, TailIndex alpha,
                                    const QuadratureSpec& spec) {
    if (n < 1) throw std::invalid_argument("dust_expectation_conditional: n must be >= 1");
    if (!(eps > 0.0)) {
        throw std::invalid_argument("dust_expectation_conditional: eps must be > 0");
    }
    const double m = static_cast<double>(n - 1);
    auto g = [&](double w) {
        double deficit = weight_laplace_deficit(eps * w, alpha);
        if (deficit >= 1.0) return 0.0;
        return std::exp(m * std::log1p(-deficit));
    };
    return static_cast<double>(n) * pareto_expect_1d(g, alpha.value(), spec);
}

DustThresholds dust_thresholds(TailIndex alpha) {
    const double a = alpha.value();
    const double c = specfun::gamma_fn(1.0 - a);
    double k1 = std::pow(1.0 / c, 1.0 / a);
    double k2 = std::pow(1.0 / (c * (2.0 - std::pow(2.0, a))), 1.0 / a);
    return {k1, k2};
}

KaramataReport karamata_check(TailIndex alpha, const std::vector<double>& eps_grid,
                              double weight_tol, double product_tol) {
    if (eps_grid.empty()) {
        throw std::invalid_argument("karamata_check: empty grid");
    }
    for (std::size_t i = 0; i + 1 < eps_grid.size(); ++i) {
        if (!(eps_grid[i] > eps_grid[i + 1]) || !(eps_grid.back() > 0.0)) {
            throw std::invalid_argument("karamata_check: grid must decrease toward 0");
        }
    }
    const double a = alpha.value();
    const double c = specfun::gamma_fn(1.0 - a);
    KaramataReport report;
    report.weight_pass = true;
    report.product_pass = true;
    double prev_w = -1.0, prev_p = -1.0;
    for (double eps : eps_grid) {
        KaramataPoint pt;
        pt.eps = eps;
        pt.weight_ratio = weight_laplace_deficit(eps, alpha) / (c * std::pow(eps, a));
        pt.product_ratio = (1.0 - product_laplace(eps, alpha)) /
                           (c * a * std::pow(eps, a) * std::log(1.0 / eps));
        pt.asymptotic_regime = std::abs(pt.weight_ratio - 1.0) <= 0.1 &&
                               std::abs(pt.product_ratio - 1.0) <= 0.1;
        double dw = std::abs(pt.weight_ratio - 1.0);
        double dp = std::abs(pt.product_ratio - 1.0);
        if (prev_w >= 0.0 && dw > prev_w * (1.0 + 1e-9)) report.weight_pass = false;
        if (prev_p >= 0.0 && dp > prev_p * (1.0 + 1e-9)) report.product_pass = false;
        prev_w = dw;
        prev_p = dp;
        report.points.push_back(pt);
    }
    if (std::abs(report.points.back().weight_ratio - 1.0) > weight_tol) {
        report.weight_pass = false;
    }
    if (std::abs(report.points.back().product_ratio - 1.0) > product_tol) {
        report.product_pass = false;
    }
    return report;
}

}  // namespace irg::oracles
