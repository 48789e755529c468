#include "trunclab/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace trunclab {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows_ * cols_ != a_.size())
        throw std::invalid_argument("ComplexMatrix: entry count does not match dimensions");
    require_finite("ComplexMatrix construction");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix out(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t top, std::size_t left,
                                   std::size_t nrows, std::size_t ncols) const {
    if (top + nrows > rows_ || left + ncols > cols_)
        throw std::invalid_argument("ComplexMatrix::block: range out of bounds");
    ComplexMatrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            out(i, j) = (*this)(top + i, left + j);
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

void ComplexMatrix::require_finite(const char* context) const {
    if (!all_finite())
        throw std::invalid_argument(std::string(context) + ": non-finite entry");
}

Complex ComplexMatrix::determinant() const {
    if (!square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    std::vector<Complex> lu = a_;
    auto at = [&](std::size_t i, std::size_t j) -> Complex& { return lu[i * n + j]; };
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::abs(at(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            det = -det;
        }
        det *= at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex f = at(i, k) / at(k, k);
            at(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("ComplexMatrix multiply: dimension mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == 0.0) continue;
            const Complex* brow = b.row_data(k);
            Complex* orow = out.row_data(i);
            for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("ComplexMatrix subtract: dimension mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

double unitarity_defect(const ComplexMatrix& u) {
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.cols()));
}

}  // namespace trunclab
