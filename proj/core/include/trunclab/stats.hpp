#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace trunclab {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

// one-sample Kolmogorov-Smirnov against a continuous CDF
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

// two-sample Kolmogorov-Smirnov
KsResult ks_test_two_sample(std::vector<double> a, std::vector<double> b);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

// goodness of fit for binned counts against expected counts; dof = bins - 1
ChiSquareResult chi_square_gof(const std::vector<double>& observed,
                               const std::vector<double>& expected);

double mean(const std::vector<double>& xs);
double sample_stddev(const std::vector<double>& xs);  // ddof = 1
double median(std::vector<double> xs);

}  // namespace trunclab
