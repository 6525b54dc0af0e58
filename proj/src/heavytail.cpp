#include "irg/heavytail.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace irg {

TailIndex::TailIndex(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("TailIndex: alpha must lie strictly in (0,1)");
    }
}

WeightVector::WeightVector(std::vector<double> vals, TailIndex a, std::uint64_t s)
    : values(std::move(vals)), alpha(a), seed(s) {
    if (values.empty()) {
        throw std::invalid_argument("WeightVector: empty sample");
    }
    for (double v : values) {
        if (!(v >= 1.0)) {
            throw std::invalid_argument("WeightVector: every weight must be >= 1");
        }
    }
}

namespace heavytail {

double pareto_quantile(double u, TailIndex alpha) {
    if (!(u >= 0.0) || !(u < 1.0)) {
        throw std::invalid_argument("pareto_quantile: u must lie in [0,1)");
    }
    return std::pow(1.0 - u, -1.0 / alpha.value());
}

double pareto_ccdf(double w, TailIndex alpha) {
    if (!(w > 0.0)) {
        throw std::invalid_argument("pareto_ccdf: w must be positive");
    }
    if (w <= 1.0) return 1.0;
    return std::pow(w, -alpha.value());
}

WeightVector sample_weights(std::size_t n, TailIndex alpha, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample_weights: n must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        // 53-bit uniform in [0,1); u is the CDF value, inverted exactly.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        vals[i] = pareto_quantile(u, alpha);
    }
    return WeightVector(std::move(vals), alpha, seed);
}

double product_ccdf(double x, TailIndex alpha, ProductTailForm form) {
    if (!(x >= 1.0)) {
        throw std::invalid_argument("product_ccdf: x must be >= 1");
    }
    const double a = alpha.value();
    const double lx = std::log(x);
    if (form == ProductTailForm::asymptotic) {
        return a * std::pow(x, -a) * lx;
    }
    // log W1 + log W2 ~ Gamma(2, 1/alpha); its tail at log x is
    // e^{-a log x} (1 + a log x).
    return std::pow(x, -a) * (1.0 + a * lx);
}

double sum_ccdf_asymptotic(double x, TailIndex alpha) {
    if (!(x >= 2.0)) {
        throw std::invalid_argument("sum_ccdf_asymptotic: x must be >= 2");
    }
    return std::min(1.0, 2.0 * std::pow(x, -alpha.value()));
}

}  // namespace heavytail
}  // namespace irg
