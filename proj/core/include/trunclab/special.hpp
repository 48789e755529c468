#pragma once

namespace trunclab {

// log(k!)
double log_factorial(unsigned k);

// regularized incomplete beta I_x(a, b), continued-fraction evaluation with
// the symmetric switch at x = (a+1)/(a+b+2)
double regularized_beta(double a, double b, double x);

// regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a)
double regularized_gamma_q(double a, double x);

// Kolmogorov distribution tail Q(lambda) = 2 sum_k (-1)^{k-1} exp(-2 k^2 lambda^2)
double kolmogorov_tail(double lambda);

}  // namespace trunclab
