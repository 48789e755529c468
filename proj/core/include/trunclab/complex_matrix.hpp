#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace trunclab {

using Complex = std::complex<double>;

// Dense row-major complex matrix.  Construction from entries rejects
// non-finite values; in-place element writes are unchecked.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Complex* row_data(std::size_t i) { return a_.data() + i * cols_; }
    const Complex* row_data(std::size_t i) const { return a_.data() + i * cols_; }
    const std::vector<Complex>& entries() const { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix block(std::size_t top, std::size_t left,
                        std::size_t nrows, std::size_t ncols) const;
    Complex trace() const;
    double max_abs() const;
    bool all_finite() const;
    void require_finite(const char* context) const;  // throws std::invalid_argument

    // determinant via LU with partial pivoting (independent of the eigensolver)
    Complex determinant() const;

    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |(U* U - I)_ij|, the unitarity defect
double unitarity_defect(const ComplexMatrix& u);

}  // namespace trunclab
