#pragma once

#include <vector>

#include "trunclab/ensemble.hpp"
#include "trunclab/exact.hpp"
#include "trunclab/quadrature.hpp"

namespace trunclab {

// Determinantal kernel of the scaled truncated-unitary eigenvalue process,
// with the normalizers N_j = pi (j-1)! (n-m-1)! / (n-m+j-1)! precomputed in
// log space (the factorial-bearing pieces overflow doubles quickly).
struct KernelSpec {
    TruncationEnsemble ensemble;
    std::vector<double> log_normalizers;  // log N_j for j = 1..m

    static KernelSpec make(const TruncationEnsemble& ensemble);
};

double log_normalizer(const TruncationEnsemble& ensemble, int j);
double normalizer(const KernelSpec& spec, int j);

// N_j / pi as an exact rational; small-n shadow for the log-space path
BigRational normalizer_pi_free_exact(const TruncationEnsemble& ensemble, int j);

// K_{n,m}(z1, z2); zero outside the support disc of radius sqrt(n/m)
Complex kernel_eval(const KernelSpec& spec, Complex z1, Complex z2);
double kernel_diag(const KernelSpec& spec, Complex z);

// E[#{ |z_j| > r }], closed incomplete-beta reduction (default path):
//   sum_{j=1}^m I_{1 - alpha r^2}(n-m, j)
// The reduction follows from the kernel integral by u = alpha s^2; the
// quadrature route below stays available as the reference.
double expected_count_outside(const KernelSpec& spec, double r);

// reference path: 2 pi int_r^{sqrt(n/m)} K(s,s) s ds
QuadResult expected_count_outside_quadrature(const KernelSpec& spec, double r,
                                             double abs_tol = 1e-9);

struct HockeyStickSum {
    BigInt direct_sum;        // sum_j binom(n-m+j-1, j)
    BigInt closed_form;       // binom(n, m) - 1
    bool identity_holds;      // the two agree exactly
    BigRational sum_times_pi; // pi * sum_j 1/(2 j N_j) = direct_sum / 2, exact
    double value() const;     // sum_j 1/(2 j N_j) as a double
};

// exact evaluation of the kernel-normalizer sum and the hockey-stick identity
HockeyStickSum hockey_stick_sum(const TruncationEnsemble& ensemble);

struct StirlingBounds {
    double log_lower;  // log( sqrt(2 pi) k^{k+1/2} e^{-k} )
    double log_upper;  // log( e k^{k+1/2} e^{-k} )
};

// uniform Stirling bracket: lower <= k! <= upper, equality only at the k=1 upper bound
StirlingBounds stirling_bounds(unsigned k);

// log of the Stirling-derived bound with binom(n,m) <= e / (2 pi sqrt(n a (1-a)))
//   * [ (1-a)^{-(1-a)} a^{-a} ]^n,  a = m/n
double log_binomial_upper_bound(const TruncationEnsemble& ensemble);

}  // namespace trunclab
