#pragma once

#include <functional>
#include <stdexcept>
#include <string>

// Special functions and adaptive quadrature used by the analytic oracles.
// Everything here is a pure function of its arguments.

namespace irg::specfun {

// Thrown when an adaptive quadrature cannot reach the requested tolerance
// within the subdivision budget. Non-convergence is never returned silently.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;

    void validate() const;
};

// Complete gamma function. Rejects the poles {0, -1, -2, ...}.
double gamma_fn(double x);

// Upper incomplete gamma  Gamma(s; x) = int_x^inf t^{s-1} e^{-t} dt,  x > 0.
// s = 0 is handled through E1; negative non-integer s goes through the
// downward recurrence Gamma(s;x) = (Gamma(s+1;x) - x^s e^{-x}) / s starting
// from the positive base s + ceil(|s|) + 1. Negative integer s is rejected.
double upper_incomplete_gamma(double s, double x);

// Regularized incomplete gamma pair for a > 0:
//   gamma_p(a,x) = P(a,x) = (1/Gamma(a)) int_0^x t^{a-1} e^{-t} dt
//   gamma_q(a,x) = Q(a,x) = 1 - P(a,x)
// Stable for large a (log-domain prefactor), used by the mixed-Poisson law.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Exponential integral E1(x) = int_x^inf e^{-t}/t dt, x > 0.
// Power series for x <= 1.5, continued fraction above.
double exp_integral_e1(double x);

// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec = {});

// int_lower^inf f(t) dt via the substitution t = lower/u, u in (0,1],
// then adaptive refinement on the unit interval. Requires lower > 0.
double integrate_1d(const std::function<double(double)>& f, double lower,
                    const QuadratureSpec& spec = {});

// Iterated version of integrate_1d over [lower_x,inf) x [lower_y,inf).
// The inner integral runs at a tighter tolerance than the outer one.
double integrate_2d(const std::function<double(double, double)>& f, double lower_x,
                    double lower_y, const QuadratureSpec& spec = {});

}  // namespace irg::specfun
