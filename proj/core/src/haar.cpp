#include "trunclab/haar.hpp"

#include <cmath>
#include <stdexcept>

#include "trunclab/qr.hpp"

namespace trunclab {

namespace {

EmpiricalMeasure make_uniform(std::vector<Complex> pts) {
    EmpiricalMeasure mu;
    const double w = 1.0 / static_cast<double>(pts.size());
    mu.weights.assign(pts.size(), w);
    mu.points = std::move(pts);
    return mu;
}

}  // namespace

EmpiricalMeasure EmpiricalMeasure::uniform_on(std::vector<Complex> pts) {
    if (pts.empty())
        throw std::invalid_argument("EmpiricalMeasure: empty point set");
    return make_uniform(std::move(pts));
}

void EmpiricalMeasure::validate() const {
    if (points.size() != weights.size())
        throw std::invalid_argument("EmpiricalMeasure: points/weights length mismatch");
    if (points.empty())
        throw std::invalid_argument("EmpiricalMeasure: empty");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0))
            throw std::invalid_argument("EmpiricalMeasure: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("EmpiricalMeasure: weights do not sum to 1");
}

EmpiricalMeasure spectral_measure(const std::vector<Complex>& z) {
    if (z.empty())
        throw std::invalid_argument("spectral_measure: empty eigenvalue list");
    return make_uniform(z);
}

ComplexMatrix sample_ginibre(int n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_ginibre: n >= 1 required");
    ComplexMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Complex* row = g.row_data(i);
        for (std::size_t j = 0; j < g.cols(); ++j) row[j] = rng.complex_gaussian();
    }
    return g;
}

ComplexMatrix sample_haar_unitary(int n, RngStream& rng) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        QrFactors f = qr_decompose(sample_ginibre(n, rng));
        bool degenerate = false;
        std::vector<Complex> phases(static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < phases.size(); ++j) {
            const Complex rjj = f.r(j, j);
            const double mag = std::abs(rjj);
            if (mag < 1e-300) {
                degenerate = true;
                break;
            }
            phases[j] = rjj / mag;
        }
        if (degenerate) continue;  // probability-zero event; resample once

        // U = Q diag(R_jj / |R_jj|)
        ComplexMatrix u = f.q;
        for (std::size_t i = 0; i < u.rows(); ++i) {
            Complex* row = u.row_data(i);
            for (std::size_t j = 0; j < u.cols(); ++j) row[j] *= phases[j];
        }
        return u;
    }
    throw std::runtime_error("sample_haar_unitary: degenerate R diagonal twice in a row");
}

ComplexMatrix truncate_and_scale(const ComplexMatrix& u, const TruncationEnsemble& ensemble) {
    if (!u.square() || u.rows() != static_cast<std::size_t>(ensemble.n))
        throw std::invalid_argument("truncate_and_scale: U must be n x n for the ensemble's n");
    ComplexMatrix block = u.block(0, 0, static_cast<std::size_t>(ensemble.m),
                                  static_cast<std::size_t>(ensemble.m));
    block *= Complex(ensemble.scale(), 0.0);
    return block;
}

}  // namespace trunclab
