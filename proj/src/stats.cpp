#include "irg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irg::stats {

MeanSe mean_se(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("mean_se: empty sample");
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double n = static_cast<double>(xs.size());
    const double mean = sum / n;
    if (xs.size() == 1) return {mean, 0.0, 1};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n * (n - 1.0))), xs.size()};
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_one_sample_from_cdf(const std::vector<double>& cdf_at_sorted) {
    if (cdf_at_sorted.empty()) {
        throw std::invalid_argument("ks_one_sample_from_cdf: empty sample");
    }
    const double n = static_cast<double>(cdf_at_sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < cdf_at_sorted.size(); ++i) {
        const double f = cdf_at_sorted[i];
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    return d;
}

double ks_critical_1pct(std::size_t n1, std::size_t n2) {
    constexpr double c01 = 1.62762;  // Kolmogorov inverse at alpha = 0.01
    const double m = static_cast<double>(n1);
    if (n2 == 0) return c01 / std::sqrt(m);
    const double k = static_cast<double>(n2);
    return c01 * std::sqrt((m + k) / (m * k));
}

double total_variation(const std::vector<std::uint64_t>& counts,
                       const std::vector<double>& model_pmf, double model_tail_beyond) {
    if (counts.size() != model_pmf.size()) {
        throw std::invalid_argument("total_variation: size mismatch");
    }
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw std::invalid_argument("total_variation: empty sample");
    double tv = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        tv += std::abs(static_cast<double>(counts[k]) / static_cast<double>(total) -
                       model_pmf[k]);
    }
    return 0.5 * (tv + model_tail_beyond);
}

}  // namespace irg::stats
