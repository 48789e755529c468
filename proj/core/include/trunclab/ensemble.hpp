#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace trunclab {

using Complex = std::complex<double>;

// The pair (n, m) with 1 <= m < n: an n x n Haar unitary truncated to its
// top-left m x m block and rescaled by sqrt(n/m).
struct TruncationEnsemble {
    int n;
    int m;

    TruncationEnsemble(int n_, int m_) : n(n_), m(m_) {
        if (m < 1 || m >= n)
            throw std::invalid_argument("TruncationEnsemble: need 1 <= m < n");
    }

    double alpha() const { return static_cast<double>(m) / n; }
    double scale() const { return std::sqrt(static_cast<double>(n) / m); }
};

// Weighted finite point set in the complex plane; weights sum to 1.
struct EmpiricalMeasure {
    std::vector<Complex> points;
    std::vector<double> weights;

    static EmpiricalMeasure uniform_on(std::vector<Complex> pts);

    std::size_t size() const { return points.size(); }
    void validate() const;  // throws std::invalid_argument on violation
};

// The empirical spectral measure: mass 1/m at each given eigenvalue.
EmpiricalMeasure spectral_measure(const std::vector<Complex>& z);

}  // namespace trunclab
