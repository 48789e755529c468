#include "trunclab/eigensolver.hpp"

#include <cmath>
#include <limits>

namespace trunclab {

namespace {

// Reduce to upper Hessenberg form by Householder similarity transforms.
void hessenberg_reduce(ComplexMatrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<Complex> v(n), w(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm_sq = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm_sq += std::norm(h(i, k));
        double norm_x = std::sqrt(norm_sq);
        if (norm_x == 0.0) continue;

        Complex x0 = h(k + 1, k);
        Complex phase = (x0 == Complex(0.0)) ? Complex(1.0) : x0 / std::abs(x0);
        Complex alpha = -phase * norm_x;

        double vnorm_sq = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm_sq += std::norm(v[i]);
        }
        if (vnorm_sq == 0.0) continue;
        const double beta = 2.0 / vnorm_sq;

        // left: H <- P H on rows k+1..n-1, columns k..n-1
        for (std::size_t j = k; j < n; ++j) w[j] = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex ci = std::conj(v[i]);
            const Complex* row = h.row_data(i);
            for (std::size_t j = k; j < n; ++j) w[j] += ci * row[j];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = beta * v[i];
            Complex* row = h.row_data(i);
            for (std::size_t j = k; j < n; ++j) row[j] -= f * w[j];
        }

        // right: H <- H P on all rows, columns k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            Complex* row = h.row_data(i);
            Complex dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) dot += row[j] * v[j];
            const Complex f = beta * dot;
            for (std::size_t j = k + 1; j < n; ++j) row[j] -= f * std::conj(v[j]);
        }

        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
        h(k + 1, k) = alpha;
    }
}

struct Givens {
    double c;
    Complex s;
};

// rotation with [c s; -conj(s) c] [a; b] = [r; 0]
Givens make_givens(Complex a, Complex b) {
    double na = std::abs(a), nb = std::abs(b);
    if (nb == 0.0) return {1.0, 0.0};
    if (na == 0.0) return {0.0, std::conj(b) / nb};
    double r = std::hypot(na, nb);
    return {na / r, (a / na) * std::conj(b) / (1.0 * r)};
}

Complex wilkinson_shift(const ComplexMatrix& h, std::size_t hi) {
    const Complex a = h(hi - 1, hi - 1);
    const Complex b = h(hi - 1, hi);
    const Complex c = h(hi, hi - 1);
    const Complex d = h(hi, hi);
    const Complex tr_half = 0.5 * (a + d);
    const Complex disc = std::sqrt(tr_half * tr_half - (a * d - b * c));
    const Complex e1 = tr_half + disc;
    const Complex e2 = tr_half - disc;
    return (std::abs(e1 - d) < std::abs(e2 - d)) ? e1 : e2;
}

}  // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& a, const EigenOptions& opts) {
    if (!a.square()) throw std::invalid_argument("eigenvalues: matrix not square");
    a.require_finite("eigenvalues");
    const std::size_t n = a.rows();
    if (n == 0) return {};
    if (n == 1) return {a(0, 0)};

    ComplexMatrix h = a;
    hessenberg_reduce(h);

    const double ulp = std::numeric_limits<double>::epsilon();
    double norm_scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm_scale = std::max(norm_scale, std::abs(h(i, i)));
    if (norm_scale == 0.0) norm_scale = 1.0;

    std::vector<Complex> eigs;
    eigs.reserve(n);

    const long budget = static_cast<long>(opts.max_sweeps_per_dim) * static_cast<long>(n);
    long sweeps = 0;
    std::size_t hi = n - 1;
    int stall = 0;
    std::vector<Givens> rot(n);

    while (true) {
        if (hi == 0) {
            eigs.push_back(h(0, 0));
            break;
        }
        // look for a negligible subdiagonal entry, scanning up from hi
        std::size_t lo = hi;
        while (lo > 0) {
            double tst = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (tst == 0.0) tst = norm_scale;
            if (std::abs(h(lo, lo - 1)) <= ulp * tst) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eigs.push_back(h(hi, hi));
            --hi;
            stall = 0;
            continue;
        }

        if (sweeps >= budget)
            throw EigenvalueError("eigenvalues: QR iteration failed to converge within " +
                                  std::to_string(budget) + " sweeps");
        ++sweeps;
        ++stall;

        Complex sigma;
        if (stall > 0 && stall % 10 == 0) {
            // exceptional shift to break symmetric stalls
            sigma = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            sigma = wilkinson_shift(h, hi);
        }

        for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= sigma;

        // left Givens sweep: reduce the shifted block to triangular
        for (std::size_t i = lo; i < hi; ++i) {
            Givens g = make_givens(h(i, i), h(i + 1, i));
            rot[i] = g;
            Complex* ri = h.row_data(i);
            Complex* rj = h.row_data(i + 1);
            for (std::size_t j = i; j <= hi; ++j) {
                const Complex x = ri[j], y = rj[j];
                ri[j] = g.c * x + g.s * y;
                rj[j] = -std::conj(g.s) * x + g.c * y;
            }
            h(i + 1, i) = 0.0;
        }
        // right sweep: RQ, restores Hessenberg form
        for (std::size_t i = lo; i < hi; ++i) {
            const Givens g = rot[i];
            for (std::size_t row = lo; row <= i + 1; ++row) {
                Complex* rr = h.row_data(row);
                const Complex x = rr[i], y = rr[i + 1];
                rr[i] = g.c * x + std::conj(g.s) * y;
                rr[i + 1] = -g.s * x + g.c * y;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) h(i, i) += sigma;
    }

    return eigs;
}

}  // namespace trunclab
