#pragma once

#include "trunclab/complex_matrix.hpp"

namespace trunclab {

struct QrFactors {
    ComplexMatrix q;  // unitary
    ComplexMatrix r;  // upper triangular
};

// Householder QR of a square complex matrix.
QrFactors qr_decompose(const ComplexMatrix& a);

}  // namespace trunclab
