#include <doctest.h>

#include <cmath>

#include "trunclab/dpp_kernel.hpp"
#include "trunclab/rng.hpp"
#include "trunclab/special.hpp"

using namespace trunclab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("kernel normalizers") {

TEST_CASE("j=1 telescopes to pi/(n-m)") {
    for (const auto& [n, m] : std::initializer_list<std::pair<int, int>>{
             {10, 3}, {20, 7}, {100, 25}, {7, 6}}) {
        const KernelSpec spec = KernelSpec::make(TruncationEnsemble(n, m));
        CHECK(normalizer(spec, 1) == doctest::Approx(kPi / (n - m)).epsilon(1e-13));
    }
}

TEST_CASE("frozen example: n=10, m=5") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(10, 5));
    CHECK(normalizer(spec, 1) == doctest::Approx(kPi / 5.0).epsilon(1e-13));
    // pi * 1! * 4! / 6! = pi/30, confirmed by the exact rational shadow
    CHECK(normalizer(spec, 2) == doctest::Approx(kPi / 30.0).epsilon(1e-13));
    CHECK(normalizer_pi_free_exact(TruncationEnsemble(10, 5), 2) == BigRational(1, 30));
}

TEST_CASE("log-space normalizers match the exact rational shadow for n <= 60") {
    for (const auto& [n, m] : std::initializer_list<std::pair<int, int>>{
             {10, 5}, {25, 12}, {40, 39}, {60, 30}, {60, 59}}) {
        const TruncationEnsemble ens(n, m);
        bool all_match = true;
        for (int j = 1; j <= m; ++j) {
            const double exact_log =
                std::log(kPi) + std::log(static_cast<double>(normalizer_pi_free_exact(ens, j)));
            const double fast_log = log_normalizer(ens, j);
            all_match = all_match && std::abs(fast_log - exact_log) <=
                                         1e-12 * std::max(1.0, std::abs(exact_log));
        }
        CHECK(all_match);
    }
}

TEST_CASE("recurrence N_{j+1}/N_j = j/(n-m+j) holds exactly in rationals") {
    const TruncationEnsemble ens(30, 12);
    for (int j = 1; j < ens.m; ++j) {
        const BigRational ratio =
            normalizer_pi_free_exact(ens, j + 1) / normalizer_pi_free_exact(ens, j);
        CHECK(ratio == BigRational(j, ens.n - ens.m + j));
    }
}

TEST_CASE("index range is enforced") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(10, 5));
    CHECK_THROWS_AS(normalizer(spec, 0), std::invalid_argument);
    CHECK_THROWS_AS(normalizer(spec, 6), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("kernel evaluation") {

TEST_CASE("vanishes outside the support disc") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(20, 5));
    const double edge = spec.ensemble.scale();
    CHECK(kernel_eval(spec, {edge + 0.01, 0.0}, {0.1, 0.0}) == Complex(0.0, 0.0));
    CHECK(kernel_eval(spec, {0.1, 0.0}, {0.0, edge}) == Complex(0.0, 0.0));
    CHECK(kernel_diag(spec, {edge, 0.0}) == 0.0);
}

TEST_CASE("diagonal is nonnegative at random points in the support") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(50, 25));
    RngStream rng(404);
    const double edge = spec.ensemble.scale();
    bool nonneg = true;
    for (int i = 0; i < 10000; ++i) {
        const double r = edge * std::sqrt(rng.uniform());
        const double th = 2.0 * kPi * rng.uniform();
        nonneg = nonneg && kernel_diag(spec, {r * std::cos(th), r * std::sin(th)}) >= 0.0;
    }
    CHECK(nonneg);
}

TEST_CASE("diagonal agrees with the general evaluator and is hermitian") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(24, 11));
    RngStream rng(11);
    for (int i = 0; i < 50; ++i) {
        const Complex z1{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
        const Complex z2{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
        const Complex k12 = kernel_eval(spec, z1, z2);
        const Complex k21 = kernel_eval(spec, z2, z1);
        CHECK(std::abs(k12 - std::conj(k21)) < 1e-12 * (1.0 + std::abs(k12)));
        CHECK(std::abs(kernel_eval(spec, z1, z1).imag()) < 1e-14);
        CHECK(kernel_eval(spec, z1, z1).real() ==
              doctest::Approx(kernel_diag(spec, z1)).epsilon(1e-12));
    }
}

TEST_CASE("kernel mass integrates to m") {
    for (const auto& [n, m] : std::initializer_list<std::pair<int, int>>{
             {10, 3}, {20, 7}, {50, 25}}) {
        const KernelSpec spec = KernelSpec::make(TruncationEnsemble(n, m));
        const QuadResult mass = expected_count_outside_quadrature(spec, 0.0, 1e-8);
        CHECK(mass.converged);
        CHECK(std::abs(mass.value - m) < 1e-6);
    }
}

}  // TEST_SUITE

TEST_SUITE("expected counts") {

TEST_CASE("boundary cases") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(12, 4));
    CHECK(expected_count_outside(spec, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(expected_count_outside(spec, spec.ensemble.scale()) == 0.0);
    CHECK(expected_count_outside(spec, 100.0) == 0.0);
    CHECK_THROWS_AS(expected_count_outside(spec, -0.5), std::invalid_argument);
}

TEST_CASE("smallest case (2,1): uniform on the sqrt(2)-disc") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(2, 1));
    // K(z,z) = 1/(2 pi) inside the disc
    CHECK(kernel_diag(spec, {0.3, 0.4}) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
    CHECK(expected_count_outside(spec, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    const QuadResult quad = expected_count_outside_quadrature(spec, 1.0, 1e-10);
    CHECK(quad.value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("incomplete-beta reduction agrees with quadrature on a grid") {
    for (const auto& [n, m] : std::initializer_list<std::pair<int, int>>{
             {100, 25}, {40, 10}, {60, 30}, {9, 8}}) {
        const KernelSpec spec = KernelSpec::make(TruncationEnsemble(n, m));
        const double edge = spec.ensemble.scale();
        double worst = 0.0;
        for (int k = 0; k <= 12; ++k) {
            const double r = edge * k / 12.0;
            const double beta_route = expected_count_outside(spec, r);
            const QuadResult quad = expected_count_outside_quadrature(spec, r, 1e-10);
            REQUIRE(quad.converged);
            worst = std::max(worst, std::abs(beta_route - quad.value));
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("monotone nonincreasing in the radius") {
    const KernelSpec spec = KernelSpec::make(TruncationEnsemble(30, 10));
    double prev = expected_count_outside(spec, 0.0);
    bool monotone = true;
    for (int k = 1; k <= 40; ++k) {
        const double cur = expected_count_outside(spec, spec.ensemble.scale() * k / 40.0);
        monotone = monotone && cur <= prev + 1e-12;
        prev = cur;
    }
    CHECK(monotone);
}

}  // TEST_SUITE

TEST_SUITE("hockey stick") {

TEST_CASE("frozen example n=6, m=3: sum equals (C(6,3)-1)/(2 pi)") {
    const HockeyStickSum hs = hockey_stick_sum(TruncationEnsemble(6, 3));
    CHECK(hs.identity_holds);
    CHECK(hs.direct_sum == 19);
    CHECK(hs.sum_times_pi == BigRational(19, 2));
    CHECK(hs.value() == doctest::Approx(19.0 / (2.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("m=1 reduces to (n-1)/(2 pi)") {
    for (const int n : {2, 5, 17}) {
        const HockeyStickSum hs = hockey_stick_sum(TruncationEnsemble(n, 1));
        CHECK(hs.identity_holds);
        CHECK(hs.direct_sum == n - 1);
    }
}

TEST_CASE("identity exact for all 1 <= m < n <= 30") {
    bool all = true;
    for (int n = 2; n <= 30; ++n)
        for (int m = 1; m < n; ++m)
            all = all && hockey_stick_sum(TruncationEnsemble(n, m)).identity_holds;
    CHECK(all);
}

TEST_CASE("n=20, m=7 exact rationals on both sides") {
    const HockeyStickSum hs = hockey_stick_sum(TruncationEnsemble(20, 7));
    CHECK(hs.identity_holds);
    CHECK(hs.closed_form == binomial_exact(20, 7) - 1);
}

TEST_CASE("matches the direct float normalizer sum") {
    const TruncationEnsemble ens(25, 9);
    const KernelSpec spec = KernelSpec::make(ens);
    double direct = 0.0;
    for (int j = 1; j <= ens.m; ++j) direct += 1.0 / (2.0 * j * normalizer(spec, j));
    CHECK(hockey_stick_sum(ens).value() == doctest::Approx(direct).epsilon(1e-10));
}

}  // TEST_SUITE

TEST_SUITE("stirling") {

TEST_CASE("k=1: upper bound is tight, lower is sqrt(2 pi)/e") {
    const StirlingBounds b = stirling_bounds(1);
    CHECK(std::exp(b.log_upper) == 1.0);
    CHECK(std::exp(b.log_lower) == doctest::Approx(std::sqrt(2.0 * kPi) / std::exp(1.0))
                                       .epsilon(1e-14));
}

TEST_CASE("brackets 5! = 120") {
    const StirlingBounds b = stirling_bounds(5);
    CHECK(std::exp(b.log_lower) < 120.0);
    CHECK(std::exp(b.log_upper) > 120.0);
}

TEST_CASE("brackets the float factorial up to k = 170") {
    double factorial = 1.0;
    bool bracket = true, strict = true;
    for (unsigned k = 1; k <= 170; ++k) {
        factorial *= k;
        const StirlingBounds b = stirling_bounds(k);
        const double lower = std::exp(b.log_lower), upper = std::exp(b.log_upper);
        bracket = bracket && lower <= factorial && factorial <= upper;
        if (k > 1) strict = strict && lower < factorial && factorial < upper;
    }
    CHECK(bracket);
    CHECK(strict);
}

TEST_CASE("log-space bracket against summed logs up to k = 500") {
    double log_factorial_sum = 0.0;
    bool bracket = true;
    for (unsigned k = 1; k <= 500; ++k) {
        log_factorial_sum += std::log(static_cast<double>(k));
        const StirlingBounds b = stirling_bounds(k);
        bracket = bracket && b.log_lower <= log_factorial_sum + 1e-12 &&
                  log_factorial_sum <= b.log_upper + 1e-12;
    }
    CHECK(bracket);
}

}  // TEST_SUITE

TEST_SUITE("binomial upper bound") {

TEST_CASE("dominates C(10,5) = 252") {
    const double bound = std::exp(log_binomial_upper_bound(TruncationEnsemble(10, 5)));
    CHECK(bound >= 252.0);
}

TEST_CASE("log bound dominates log C(100,50)") {
    const double log_binom =
        std::log(static_cast<double>(binomial_exact(100, 50)));
    CHECK(log_binomial_upper_bound(TruncationEnsemble(100, 50)) >= log_binom);
}

TEST_CASE("ratio to the exact binomial stays below 1.5 at m = n/2, n <= 200") {
    double worst = 0.0;
    for (int n = 2; n <= 200; n += 2) {
        const double log_bound = log_binomial_upper_bound(TruncationEnsemble(n, n / 2));
        const double log_exact = std::log(
            static_cast<double>(binomial_exact(static_cast<unsigned>(n),
                                               static_cast<unsigned>(n / 2))));
        CHECK(log_bound >= log_exact - 1e-12);
        worst = std::max(worst, std::exp(log_bound - log_exact));
    }
    CHECK(worst <= 1.5);
}

}  // TEST_SUITE
