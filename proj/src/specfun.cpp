#include "irg/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace irg::specfun {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lower regularized incomplete gamma by series, for x < a + 1.
double gamma_p_series(double a, double x) {
    if (x <= 0.0) return 0.0;
    double log_pre = a * std::log(x) - x - std::lgamma(a + 1.0);
    if (log_pre < -745.0) return 0.0;  // underflow: P is numerically zero
    double sum = 1.0;
    double term = 1.0;
    double ap = a;
    for (int k = 0; k < 10000; ++k) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return std::exp(log_pre) * sum;
}

// Upper incomplete gamma continued fraction (Legendre), modified Lentz.
// Returns Gamma(a; x) un-regularized; valid for x >= ~max(1, a+1), any real a.
double upper_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    double log_pre = a * std::log(x) - x;
    if (log_pre < -745.0) return 0.0;
    return std::exp(log_pre) * h;
}

// Gamma(s; x) for s > 0, or s == 0 with x above the series/CF switch point.
double upper_incgamma_nonneg(double s, double x) {
    if (s > 0.0 && x < s + 1.0) {
        return std::tgamma(s) * (1.0 - gamma_p_series(s, x));
    }
    return upper_cf(s, x);
}

// --- Gauss-Kronrod (7,15) pair, abscissae/weights on [-1,1] ---
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double a, b;
    double value;
    double error;
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    // node layout: kXgk[0..6] gives the +/- pairs, kXgk[7]=0 the center
    double result_k = 0.0;
    double result_g = 0.0;
    double fc = f(center);
    result_k += kWgk[7] * fc;
    result_g += kWg[3] * fc;
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        double x = half * kXgk[j];
        double f1 = f(center - x);
        double f2 = f(center + x);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        result_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_g += kWg[j / 2] * (f1 + f2);
    }
    double value = result_k * half;
    // QUADPACK-style rescaled error estimate
    double mean = result_k * 0.5;
    double asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        asc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    }
    asc *= std::abs(half);
    double err = std::abs((result_k - result_g) * half);
    if (asc != 0.0 && err != 0.0) {
        err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    }
    if (!std::isfinite(value)) {
        throw QuadratureError("integrand produced a non-finite value");
    }
    return {a, b, value, err};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw std::invalid_argument("max_subdivisions must be >= 1");
    }
}

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) {
        throw std::invalid_argument("gamma_fn: pole at nonpositive integer argument");
    }
    return std::tgamma(x);
}

double gamma_p(double a, double x) {
    if (a <= 0.0) throw std::invalid_argument("gamma_p: requires a > 0");
    if (x < 0.0) throw std::invalid_argument("gamma_p: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    double lg = std::lgamma(a);
    double g = upper_cf(a, x);
    // Q = Gamma(a;x)/Gamma(a), computed in logs when Gamma(a) overflows.
    double q = (lg < 700.0) ? g / std::exp(lg) : std::exp(std::log(g) - lg);
    return 1.0 - q;
}

double gamma_q(double a, double x) { return 1.0 - gamma_p(a, x); }

double exp_integral_e1(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("exp_integral_e1: requires x > 0");
    if (x <= 1.5) {
        // E1(x) = -gamma - log x + sum_{n>=1} (-1)^{n+1} x^n / (n n!)
        double sum = 0.0;
        double term = 1.0;  // x^n / n!
        for (int n = 1; n <= 60; ++n) {
            term *= x / n;
            double contrib = term / n;
            sum += (n % 2 == 1) ? contrib : -contrib;
            if (contrib < 1e-18) break;
        }
        return -kEulerGamma - std::log(x) + sum;
    }
    // E1(x) = e^{-x} / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...)))
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x) * h;
}

double upper_incomplete_gamma(double s, double x) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("upper_incomplete_gamma: requires x > 0");
    }
    if (s == 0.0) {
        return (x < 1.5) ? exp_integral_e1(x) : upper_cf(0.0, x);
    }
    if (s > 0.0) {
        return upper_incgamma_nonneg(s, x);
    }
    if (std::abs(s - std::round(s)) < 1e-12) {
        throw std::invalid_argument(
            "upper_incomplete_gamma: negative integer s not supported");
    }
    // Downward recurrence Gamma(s;x) = (Gamma(s+1;x) - x^s e^{-x}) / s from a
    // positive base; each step lowers s by one.
    int m = static_cast<int>(std::ceil(-s)) + 1;
    double base = s + m;
    double g = upper_incgamma_nonneg(base, x);
    for (int k = m - 1; k >= 0; --k) {
        double sk = s + k;
        double log_t = sk * std::log(x) - x;
        double t = (log_t < -745.0) ? 0.0 : std::exp(log_t);
        g = (g - t) / sk;
    }
    return g;
}

double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");

    auto worse = [](const Interval& lhs, const Interval& rhs) {
        return lhs.error < rhs.error;
    };
    std::priority_queue<Interval, std::vector<Interval>, decltype(worse)> heap(worse);
    Interval whole = gk15(f, a, b);
    double total_value = whole.value;
    double total_error = whole.error;
    heap.push(whole);
    int used = 1;
    while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value))) {
        if (used >= spec.max_subdivisions) {
            throw QuadratureError("integrate_finite: tolerance not reached within " +
                                  std::to_string(spec.max_subdivisions) +
                                  " subdivisions (error estimate " +
                                  std::to_string(total_error) + ")");
        }
        Interval top = heap.top();
        heap.pop();
        double mid = 0.5 * (top.a + top.b);
        if (mid <= top.a || mid >= top.b) {
            throw QuadratureError("integrate_finite: interval collapsed below "
                                  "machine precision before convergence");
        }
        Interval left = gk15(f, top.a, mid);
        Interval right = gk15(f, mid, top.b);
        total_value += left.value + right.value - top.value;
        total_error += left.error + right.error - top.error;
        heap.push(left);
        heap.push(right);
        ++used;
    }
    return total_value;
}

double integrate_1d(const std::function<double(double)>& f, double lower,
                    const QuadratureSpec& spec) {
    if (!(lower > 0.0)) {
        throw std::invalid_argument("integrate_1d: requires lower > 0");
    }
    // t = lower/u maps [lower, inf) to u in (0, 1]; dt = lower/u^2 du.
    auto g = [&f, lower](double u) {
        double t = lower / u;
        return f(t) * lower / (u * u);
    };
    return integrate_finite(g, 0.0, 1.0, spec);
}

double integrate_2d(const std::function<double(double, double)>& f, double lower_x,
                    double lower_y, const QuadratureSpec& spec) {
    QuadratureSpec inner = spec;
    inner.rel_tol = spec.rel_tol * 0.1;
    inner.abs_tol = spec.abs_tol * 0.1;
    auto outer = [&](double x) {
        return integrate_1d([&](double y) { return f(x, y); }, lower_y, inner);
    };
    return integrate_1d(outer, lower_x, spec);
}

}  // namespace irg::specfun
