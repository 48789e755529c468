#include "trunclab/qr.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace trunclab {

QrFactors qr_decompose(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("qr_decompose: matrix not square");
    a.require_finite("qr_decompose");

    const std::size_t n = a.rows();
    ComplexMatrix r = a;
    ComplexMatrix q = ComplexMatrix::identity(n);
    std::vector<Complex> v(n), w(n);

    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Householder vector for column k
        double norm_sq = 0.0;
        for (std::size_t i = k; i < n; ++i) norm_sq += std::norm(r(i, k));
        double norm_x = std::sqrt(norm_sq);
        if (norm_x == 0.0) continue;

        Complex x0 = r(k, k);
        Complex phase = (x0 == Complex(0.0)) ? Complex(1.0) : x0 / std::abs(x0);
        Complex alpha = -phase * norm_x;

        double vnorm_sq = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            v[i] = r(i, k);
            if (i == k) v[i] -= alpha;
            vnorm_sq += std::norm(v[i]);
        }
        if (vnorm_sq == 0.0) continue;
        const double beta = 2.0 / vnorm_sq;

        // R <- (I - beta v v*) R, rows k..n-1
        for (std::size_t j = k; j < n; ++j) w[j] = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            const Complex ci = std::conj(v[i]);
            const Complex* row = r.row_data(i);
            for (std::size_t j = k; j < n; ++j) w[j] += ci * row[j];
        }
        for (std::size_t i = k; i < n; ++i) {
            const Complex f = beta * v[i];
            Complex* row = r.row_data(i);
            for (std::size_t j = k; j < n; ++j) row[j] -= f * w[j];
        }

        // Q <- Q (I - beta v v*)
        for (std::size_t i = 0; i < n; ++i) {
            Complex* row = q.row_data(i);
            Complex dot = 0.0;
            for (std::size_t j = k; j < n; ++j) dot += row[j] * v[j];
            const Complex f = beta * dot;
            for (std::size_t j = k; j < n; ++j) row[j] -= f * std::conj(v[j]);
        }
    }

    // clean the strict lower triangle
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) r(i, j) = 0.0;

    // canonical form: R diagonal real and nonnegative, phases absorbed into Q
    for (std::size_t j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag == 0.0) continue;
        const Complex phase = rjj / mag;
        const Complex inv = std::conj(phase);
        Complex* rrow = r.row_data(j);
        for (std::size_t k = j; k < n; ++k) rrow[k] *= inv;
        r(j, j) = mag;  // exact
        for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
    }

    return {std::move(q), std::move(r)};
}

}  // namespace trunclab
