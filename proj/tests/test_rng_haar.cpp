#include <doctest.h>

#include <cmath>

#include "trunclab/eigensolver.hpp"
#include "trunclab/haar.hpp"
#include "trunclab/stats.hpp"

using namespace trunclab;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLevel = 0.001;
}  // namespace

TEST_SUITE("rng") {

TEST_CASE("trial substreams are deterministic and distinct") {
    RngStream a = RngStream::for_trial(99, 4);
    RngStream b = RngStream::for_trial(99, 4);
    RngStream c = RngStream::for_trial(99, 5);
    bool all_equal = true, any_equal_to_c = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t xa = a.raw(), xb = b.raw(), xc = c.raw();
        all_equal = all_equal && (xa == xb);
        any_equal_to_c = any_equal_to_c || (xa == xc);
    }
    CHECK(all_equal);
    CHECK_FALSE(any_equal_to_c);
}

TEST_CASE("uniform stays in [0,1) and gaussian moments check out") {
    RngStream rng(12345);
    double sum = 0.0, sum_sq = 0.0;
    const int n = 200000;
    bool in_range = true;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        in_range = in_range && (u >= 0.0) && (u < 1.0);
        const double g = rng.gaussian();
        sum += g;
        sum_sq += g * g;
    }
    CHECK(in_range);
    CHECK(std::abs(sum / n) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sum_sq / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

}  // TEST_SUITE

TEST_SUITE("ginibre") {

TEST_CASE("fixed seed reproduces the matrix") {
    RngStream a(77), b(77);
    const ComplexMatrix ga = sample_ginibre(6, a);
    const ComplexMatrix gb = sample_ginibre(6, b);
    CHECK(max_abs_diff(ga, gb) == 0.0);
}

TEST_CASE("n=1 gives a single complex gaussian scalar") {
    RngStream rng(3);
    const ComplexMatrix g = sample_ginibre(1, rng);
    CHECK(g.rows() == 1);
    CHECK(g.cols() == 1);
    CHECK(std::isfinite(g(0, 0).real()));
}

TEST_CASE("entry moments: mean 0, E|g|^2 = 1 within 4 sigma") {
    RngStream rng(2024);
    const int n = 64, samples = 100;
    double sum_re = 0.0, sum_im = 0.0, sum_sq = 0.0;
    const double count = static_cast<double>(n) * n * samples;
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix g = sample_ginibre(n, rng);
        for (const Complex& z : g.entries()) {
            sum_re += z.real();
            sum_im += z.imag();
            sum_sq += std::norm(z);
        }
    }
    // per-entry variance of re/im is 1/2; var(|g|^2) = 1
    CHECK(std::abs(sum_re / count) < 4.0 * std::sqrt(0.5 / count));
    CHECK(std::abs(sum_im / count) < 4.0 * std::sqrt(0.5 / count));
    CHECK(std::abs(sum_sq / count - 1.0) < 4.0 * std::sqrt(1.0 / count));
}

TEST_CASE("rejects n < 1") {
    RngStream rng(1);
    CHECK_THROWS_AS(sample_ginibre(0, rng), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("haar") {

TEST_CASE("unitarity and unimodular determinant") {
    RngStream rng(31);
    for (const int n : {2, 8, 32}) {
        const ComplexMatrix u = sample_haar_unitary(n, rng);
        CHECK(unitarity_defect(u) < 1e-10);
        CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-8);
    }
}

TEST_CASE("eigenvalue angles are uniform on the circle") {
    RngStream rng(57);
    std::vector<double> angles;
    const int n = 32, samples = 500;
    angles.reserve(static_cast<std::size_t>(n) * samples);
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix u = sample_haar_unitary(n, rng);
        for (const Complex& z : eigenvalues(u)) {
            double th = std::arg(z);
            if (th < 0.0) th += 2.0 * kPi;
            angles.push_back(th / (2.0 * kPi));
        }
    }
    const KsResult ks = ks_test(angles, [](double x) { return x; });
    CHECK(ks.p_value >= kLevel);
}

TEST_CASE("1x1 Haar is a uniform phase") {
    RngStream rng(91);
    std::vector<double> phases;
    bool unimodular = true;
    for (int i = 0; i < 10000; ++i) {
        const ComplexMatrix u = sample_haar_unitary(1, rng);
        unimodular = unimodular && std::abs(std::abs(u(0, 0)) - 1.0) < 1e-12;
        double th = std::arg(u(0, 0));
        if (th < 0.0) th += 2.0 * kPi;
        phases.push_back(th / (2.0 * kPi));
    }
    CHECK(unimodular);
    const KsResult ks = ks_test(phases, [](double x) { return x; });
    CHECK(ks.p_value >= kLevel);
}

}  // TEST_SUITE

TEST_SUITE("truncation") {

TEST_CASE("scale boundary at m = n-1") {
    RngStream rng(5);
    const TruncationEnsemble ens(5, 4);
    const ComplexMatrix u = sample_haar_unitary(5, rng);
    const ComplexMatrix a = truncate_and_scale(u, ens);
    CHECK(a.rows() == 4);
    CHECK(std::abs(ens.scale() - std::sqrt(5.0 / 4.0)) < 1e-15);
    CHECK(std::abs(a(1, 2) - Complex(ens.scale()) * u(1, 2)) < 1e-15);
}

TEST_CASE("operator norm bounded by the scale") {
    RngStream rng(8);
    const TruncationEnsemble ens(24, 6);
    const ComplexMatrix u = sample_haar_unitary(24, rng);
    const ComplexMatrix a = truncate_and_scale(u, ens);
    // power iteration on A* A
    const ComplexMatrix ata = a.adjoint() * a;
    std::vector<Complex> v(a.cols(), Complex(1.0, 0.0));
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        std::vector<Complex> w(a.cols(), 0.0);
        for (std::size_t i = 0; i < ata.rows(); ++i)
            for (std::size_t j = 0; j < ata.cols(); ++j) w[i] += ata(i, j) * v[j];
        double norm = 0.0;
        for (const Complex& x : w) norm += std::norm(x);
        norm = std::sqrt(norm);
        lambda = norm;
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / norm;
    }
    CHECK(std::sqrt(lambda) <= ens.scale() + 1e-10);
}

TEST_CASE("eigenvalues stay strictly inside the scaled disc") {
    RngStream rng(21);
    const TruncationEnsemble ens(30, 10);
    bool inside = true;
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix u = sample_haar_unitary(30, rng);
        for (const Complex& z : eigenvalues(truncate_and_scale(u, ens)))
            inside = inside && std::abs(z) < ens.scale();
    }
    CHECK(inside);
}

TEST_CASE("dimension mismatch is rejected") {
    RngStream rng(2);
    const ComplexMatrix u = sample_haar_unitary(6, rng);
    CHECK_THROWS_AS(truncate_and_scale(u, TruncationEnsemble(8, 3)), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("spectral measure") {

TEST_CASE("point mass and uniform weights") {
    const EmpiricalMeasure one = spectral_measure({Complex(0.0, 0.0)});
    CHECK(one.size() == 1);
    CHECK(one.weights[0] == 1.0);

    const EmpiricalMeasure two = spectral_measure({Complex(1.0, 0.0), Complex(-1.0, 0.0)});
    CHECK(two.weights[0] == 0.5);
    CHECK(two.weights[1] == 0.5);

    CHECK_THROWS_AS(spectral_measure({}), std::invalid_argument);
}

TEST_CASE("total mass is 1 within 1e-12") {
    std::vector<Complex> pts;
    for (int k = 0; k < 37; ++k) pts.emplace_back(k * 0.1, -k * 0.05);
    const EmpiricalMeasure mu = spectral_measure(pts);
    double total = 0.0;
    for (double w : mu.weights) total += w;
    CHECK(std::abs(total - 1.0) <= 1e-12);
    mu.validate();
}

}  // TEST_SUITE

TEST_SUITE("pipeline invariants") {

TEST_CASE("seed -> eigenvalues is bit-reproducible") {
    const TruncationEnsemble ens(16, 4);
    auto run = [&]() {
        RngStream rng = RngStream::for_trial(123456, 7);
        return eigenvalues(truncate_and_scale(sample_haar_unitary(16, rng), ens));
    };
    const std::vector<Complex> a = run(), b = run();
    REQUIRE(a.size() == b.size());
    bool identical = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        identical = identical && a[i].real() == b[i].real() && a[i].imag() == b[i].imag();
    CHECK(identical);
}

TEST_CASE("modulus law is invariant under fixed diagonal phase rotation") {
    const TruncationEnsemble ens(32, 8);
    std::vector<Complex> phases;
    {
        RngStream pr(1001);
        for (int i = 0; i < 32; ++i) {
            const double th = 2.0 * kPi * pr.uniform();
            phases.emplace_back(std::cos(th), std::sin(th));
        }
    }
    const ComplexMatrix d = ComplexMatrix::diagonal(phases);

    std::vector<double> plain, rotated;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
        RngStream r1 = RngStream::for_trial(555, static_cast<std::uint64_t>(t));
        const ComplexMatrix u1 = sample_haar_unitary(32, r1);
        for (const Complex& z : eigenvalues(truncate_and_scale(u1, ens)))
            plain.push_back(std::abs(z));

        RngStream r2 = RngStream::for_trial(777, static_cast<std::uint64_t>(t));
        const ComplexMatrix u2 = d * sample_haar_unitary(32, r2);
        for (const Complex& z : eigenvalues(truncate_and_scale(u2, ens)))
            rotated.push_back(std::abs(z));
    }
    const KsResult ks = ks_test_two_sample(plain, rotated);
    CHECK(ks.p_value >= kLevel);
}

TEST_CASE("exact law at (n,m)=(2,1): |z|^2/2 uniform on [0,1]") {
    const TruncationEnsemble ens(2, 1);
    std::vector<double> values;
    values.reserve(10000);
    for (int t = 0; t < 10000; ++t) {
        RngStream rng = RngStream::for_trial(4242, static_cast<std::uint64_t>(t));
        const std::vector<Complex> eigs =
            eigenvalues(truncate_and_scale(sample_haar_unitary(2, rng), ens));
        values.push_back(std::norm(eigs[0]) / 2.0);
    }
    const KsResult ks = ks_test(values, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(ks.p_value >= kLevel);
}

}  // TEST_SUITE
