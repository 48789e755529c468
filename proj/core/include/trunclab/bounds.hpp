#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "trunclab/ensemble.hpp"

namespace trunclab {

// One evaluated probability bound.  Bounds can be vacuous (>= 1) at desk
// scale; the flag lets experiments separate "holds trivially" from
// "informative".  Everything is assembled in log space and exponentiated
// last; overflow is clamped to +infinity and flagged.
struct BoundReport {
    std::string name;
    int n = 0, m = 0;
    double parameter = 0.0;  // r or eps where applicable
    double value = 0.0;
    double log_value = 0.0;
    bool vacuous = false;
    bool overflowed = false;
    std::vector<std::pair<std::string, double>> components;

    double component(const std::string& key) const;
};

double c_alpha(double alpha);        // 1 / (128 pi (1 + sqrt(3 + log(1/alpha)))^2)
double c_alpha_prime(double alpha);  // 6 + 3 log(1/alpha)
double eta_alpha(double alpha);      // 1 + eta = sqrt(3 + log(1/alpha))

// right side of the spectral-measure concentration inequality:
// e^2 exp(-C_a m^2 r^2 + 2m log m + C'_a m) + (e/2pi) sqrt(m/(1-a)) e^{-m}
BoundReport concentration_bound(const TruncationEnsemble& ensemble, double r);

// edge overshoot bound for P[max |z_j| > 1+eps]; exactly 0 once
// eps >= 1/sqrt(alpha) - 1
BoundReport edge_bound(const TruncationEnsemble& ensemble, double eps);

// (e/2pi) sqrt(m/(1-alpha)) e^{-m}
BoundReport simplified_tail_bound(const TruncationEnsemble& ensemble);

// eps*(alpha) with (1+eps*)^2 = (1/alpha)[1 - (1-alpha)(alpha/e)^{alpha/(1-alpha)}]
double epsilon_threshold(double alpha);

struct DeltaM {
    double value = 0.0;        // active branch
    bool dense_branch = false; // m >= n/e
    double dense_value = 0.0;  // 48 sqrt(2 pi log(m) / m); needs m >= 2
    double sparse_value = 0.0; // 165 sqrt(log(n/m) log(n)) / sqrt(m)
};

DeltaM delta_m(int n, int m);

struct MollifierChoice {
    double epsilon = 0.0;
    std::array<double, 5> terms{};
    int argmin = 0;
    // the union-proof eta satisfies 1 + eta < 1/sqrt(alpha) only for small
    // alpha; flagged (not fatal) when violated numerically
    bool eta_below_support = true;
};

// eps = min of the five proof terms, with 1 + eta_alpha = sqrt(3 + log(1/alpha))
MollifierChoice mollifier_epsilon_choice(const TruncationEnsemble& ensemble);

}  // namespace trunclab
