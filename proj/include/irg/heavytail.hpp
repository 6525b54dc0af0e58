#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Pareto fitness distribution with tail index alpha in (0,1):
//   P(W > w) = w^{-alpha} for w > 1,  = 1 for 0 < w <= 1.
// Infinite-mean regime throughout; weights are never truncated.

namespace irg {

// Tail index alpha, constrained to the open interval (0,1).
class TailIndex {
public:
    explicit TailIndex(double alpha);
    double value() const { return alpha_; }

    friend bool operator==(TailIndex a, TailIndex b) { return a.alpha_ == b.alpha_; }

private:
    double alpha_;
};

// An i.i.d. Pareto(alpha) sample (W_1, ..., W_n), every value >= 1.
struct WeightVector {
    std::vector<double> values;
    TailIndex alpha;
    std::uint64_t seed = 0;

    WeightVector(std::vector<double> vals, TailIndex a, std::uint64_t s);
    std::size_t n() const { return values.size(); }
};

namespace heavytail {

// Inverse CDF: u in [0,1) -> (1-u)^{-1/alpha} >= 1.
double pareto_quantile(double u, TailIndex alpha);

// P(W > w) for w > 0.
double pareto_ccdf(double w, TailIndex alpha);

// Deterministic i.i.d. sample of size n >= 1. Uniform variates come from
// mt19937_64(seed), mapped to [0,1) with 53-bit precision, one per weight.
WeightVector sample_weights(std::size_t n, TailIndex alpha, std::uint64_t seed);

enum class ProductTailForm {
    exact,       // x^{-alpha} (1 + alpha log x), the Gamma(2, 1/alpha) tail
    asymptotic,  // alpha x^{-alpha} log x
};

// P(W1 W2 > x) for independent weights, x >= 1.
double product_ccdf(double x, TailIndex alpha, ProductTailForm form = ProductTailForm::exact);

// Subexponential approximation P(W1 + W2 > x) ~ 2 x^{-alpha}, x >= 2,
// capped at 1 so it can be reported as a probability.
double sum_ccdf_asymptotic(double x, TailIndex alpha);

}  // namespace heavytail
}  // namespace irg
