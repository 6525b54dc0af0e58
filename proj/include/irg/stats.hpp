#pragma once

#include <cstdint>
#include <vector>

// Small statistical helpers shared by the verification suite and tests.

namespace irg::stats {

struct MeanSe {
    double mean;
    double se;  // standard error of the mean
    std::size_t count;
};

MeanSe mean_se(const std::vector<double>& xs);

// Two-sample Kolmogorov-Smirnov distance sup_x |F1(x) - F2(x)|.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// One-sample KS distance against cdf values evaluated at the sorted sample,
// i.e. caller supplies F(x_(i)) for the ascending sample.
double ks_one_sample_from_cdf(const std::vector<double>& cdf_at_sorted);

// Critical value of the (two-sided) KS statistic at significance level
// 0.01, asymptotic form c(0.01) * sqrt((n1+n2)/(n1*n2)); pass n2 = 0 for the
// one-sample version with effective size n1.
double ks_critical_1pct(std::size_t n1, std::size_t n2 = 0);

// Total variation distance between an empirical pmf over {0,1,...} given as
// counts and a model pmf callback; the model's mass beyond the largest
// observed value is added via its ccdf there.
double total_variation(const std::vector<std::uint64_t>& counts,
                       const std::vector<double>& model_pmf, double model_tail_beyond);

}  // namespace irg::stats
