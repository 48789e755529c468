#pragma once

#include "trunclab/complex_matrix.hpp"
#include "trunclab/ensemble.hpp"
#include "trunclab/rng.hpp"

namespace trunclab {

// n x n matrix of i.i.d. standard complex Gaussians (E|g|^2 = 1).
ComplexMatrix sample_ginibre(int n, RngStream& rng);

// Haar-distributed unitary: QR of a Ginibre sample with the R-diagonal
// phase fix (plain QR is not Haar because of the phase ambiguity).
ComplexMatrix sample_haar_unitary(int n, RngStream& rng);

// sqrt(n/m) times the top-left m x m block of U.
ComplexMatrix truncate_and_scale(const ComplexMatrix& u, const TruncationEnsemble& ensemble);

}  // namespace trunclab
