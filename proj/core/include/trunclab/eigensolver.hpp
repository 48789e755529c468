#pragma once

#include <stdexcept>
#include <vector>

#include "trunclab/complex_matrix.hpp"

namespace trunclab {

struct EigenOptions {
    // total QR sweep budget is max_sweeps_per_dim * dim
    int max_sweeps_per_dim = 30;
};

class EigenvalueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All eigenvalues (with multiplicity, unspecified order) of a square complex
// matrix: Householder Hessenberg reduction followed by Wilkinson-shifted
// single-shift QR iteration on the complex Hessenberg form.
std::vector<Complex> eigenvalues(const ComplexMatrix& a, const EigenOptions& opts = {});

}  // namespace trunclab
