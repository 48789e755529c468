#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace trunclab {

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod 15(7) on [a,b] to an absolute tolerance.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, std::size_t max_intervals = 4000);

// As above but throws QuadratureError if the tolerance is not reached.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, std::size_t max_intervals = 4000);

}  // namespace trunclab
