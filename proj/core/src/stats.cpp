#include "trunclab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trunclab/special.hpp"

namespace trunclab {

namespace {

double ks_p_value(double statistic, double effective_n) {
    const double rn = std::sqrt(effective_n);
    // Stephens' finite-sample correction
    return kolmogorov_tail((rn + 0.12 + 0.11 / rn) * statistic);
}

}  // namespace

KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_test: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max((i + 1) / n - f, f - i / n));
    }
    return {d, ks_p_value(d, n), samples.size()};
}

KsResult ks_test_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_test_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    const double n_eff = na * nb / (na + nb);
    return {d, ks_p_value(d, n_eff), a.size() + b.size()};
}

ChiSquareResult chi_square_gof(const std::vector<double>& observed,
                               const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.size() < 2)
        throw std::invalid_argument("chi_square_gof: need matching bins, at least 2");
    double stat = 0.0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        if (expected[k] <= 0.0)
            throw std::invalid_argument("chi_square_gof: nonpositive expected count");
        const double diff = observed[k] - expected[k];
        stat += diff * diff / expected[k];
    }
    const std::size_t dof = observed.size() - 1;
    const double p = regularized_gamma_q(0.5 * dof, 0.5 * stat);
    return {stat, dof, p};
}

double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double mu = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - mu) * (x - mu);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median: empty");
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[k];
    return 0.5 * (xs[k - 1] + xs[k]);
}

}  // namespace trunclab
