#pragma once

// Test-only oracles, kept independent of the production paths they check.

#include <complex>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

// Transportation optimum by exhaustive enumeration of spanning-tree bases
// (all basic feasible couplings); practical for supports up to ~4x4.
double transport_bruteforce(const std::vector<double>& supply,
                            const std::vector<double>& demand,
                            const std::vector<double>& cost);

// maximize c^T x subject to A x <= b, x >= 0 with a dense tableau simplex
double dense_simplex_max(std::vector<std::vector<double>> a, std::vector<double> b,
                         std::vector<double> c);

// Bounded-Lipschitz distance by the pairwise-constraint LP on the pooled
// support, solved with the dense simplex above: independent of both the
// network simplex and the truncated-metric reduction used in production.
double dbl_dense_lp(const std::vector<Complex>& mu_points, const std::vector<double>& mu_weights,
                    const std::vector<Complex>& nu_points, const std::vector<double>& nu_weights);

// 50-digit shadows of the log-space bound assemblies
double shadow_concentration_log(int n, int m, double r);
double shadow_edge_log(int n, int m, double eps);
double shadow_tail_log(int n, int m);
double shadow_epsilon_threshold(double alpha);
double shadow_finite_potential(int n, int m, double abs_z);

}  // namespace oracles
