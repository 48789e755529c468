#include "trunclab/dpp_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "trunclab/special.hpp"

namespace trunclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kExactLimit = 400;       // factorial arguments stay tractable
constexpr int kHockeyStickLimit = 512; // runtime guard for the exact sum
}  // namespace

double log_normalizer(const TruncationEnsemble& ensemble, int j) {
    if (j < 1 || j > ensemble.m)
        throw std::invalid_argument("log_normalizer: j out of range 1..m");
    const int nm = ensemble.n - ensemble.m;
    // N_j = pi (j-1)! (n-m-1)! / (n-m+j-1)!
    return std::log(kPi) + std::lgamma(static_cast<double>(j)) +
           std::lgamma(static_cast<double>(nm)) - std::lgamma(static_cast<double>(nm + j));
}

KernelSpec KernelSpec::make(const TruncationEnsemble& ensemble) {
    KernelSpec spec{ensemble, {}};
    spec.log_normalizers.reserve(static_cast<std::size_t>(ensemble.m));
    for (int j = 1; j <= ensemble.m; ++j)
        spec.log_normalizers.push_back(log_normalizer(ensemble, j));
    return spec;
}

double normalizer(const KernelSpec& spec, int j) {
    if (j < 1 || j > spec.ensemble.m)
        throw std::invalid_argument("normalizer: j out of range 1..m");
    return std::exp(spec.log_normalizers[static_cast<std::size_t>(j - 1)]);
}

BigRational normalizer_pi_free_exact(const TruncationEnsemble& ensemble, int j) {
    if (j < 1 || j > ensemble.m)
        throw std::invalid_argument("normalizer_pi_free_exact: j out of range 1..m");
    if (ensemble.n > kExactLimit)
        throw std::invalid_argument("normalizer_pi_free_exact: n beyond exact-path bound");
    const unsigned nm = static_cast<unsigned>(ensemble.n - ensemble.m);
    BigInt num = factorial_exact(static_cast<unsigned>(j - 1)) * factorial_exact(nm - 1);
    BigInt den = factorial_exact(nm + static_cast<unsigned>(j) - 1);
    return BigRational(num, den);
}

Complex kernel_eval(const KernelSpec& spec, Complex z1, Complex z2) {
    const TruncationEnsemble& ens = spec.ensemble;
    const double a = ens.alpha();
    const double t1 = 1.0 - a * std::norm(z1);
    const double t2 = 1.0 - a * std::norm(z2);
    if (t1 <= 0.0 || t2 <= 0.0) return 0.0;

    const double decay = 0.5 * (ens.n - ens.m - 1) * (std::log(t1) + std::log(t2));
    const Complex w = a * z1 * std::conj(z2);
    const double wmag = std::abs(w);

    if (wmag == 0.0) {
        // only the j=1 term survives
        return std::exp(std::log(a) - spec.log_normalizers[0] + decay);
    }

    const double log_w = std::log(wmag);
    const double phase = std::arg(w);
    double max_log = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= ens.m; ++j) {
        const double lj = (j - 1) * log_w - spec.log_normalizers[static_cast<std::size_t>(j - 1)];
        if (lj > max_log) max_log = lj;
    }
    Complex sum = 0.0;
    for (int j = 1; j <= ens.m; ++j) {
        const double lj = (j - 1) * log_w - spec.log_normalizers[static_cast<std::size_t>(j - 1)];
        sum += std::polar(std::exp(lj - max_log), (j - 1) * phase);
    }
    return std::exp(std::log(a) + decay + max_log) * sum;
}

double kernel_diag(const KernelSpec& spec, Complex z) {
    const TruncationEnsemble& ens = spec.ensemble;
    const double a = ens.alpha();
    const double t = 1.0 - a * std::norm(z);
    if (t <= 0.0) return 0.0;
    const double decay = (ens.n - ens.m - 1) * std::log(t);
    const double u = a * std::norm(z);
    if (u == 0.0) return std::exp(std::log(a) - spec.log_normalizers[0] + decay);
    const double log_u = std::log(u);
    double max_log = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= ens.m; ++j) {
        const double lj = (j - 1) * log_u - spec.log_normalizers[static_cast<std::size_t>(j - 1)];
        if (lj > max_log) max_log = lj;
    }
    double sum = 0.0;
    for (int j = 1; j <= ens.m; ++j) {
        const double lj = (j - 1) * log_u - spec.log_normalizers[static_cast<std::size_t>(j - 1)];
        sum += std::exp(lj - max_log);
    }
    return std::exp(std::log(a) + decay + max_log) * sum;
}

double expected_count_outside(const KernelSpec& spec, double r) {
    if (r < 0.0) throw std::invalid_argument("expected_count_outside: negative radius");
    const TruncationEnsemble& ens = spec.ensemble;
    if (r >= ens.scale()) return 0.0;
    const double x = 1.0 - ens.alpha() * r * r;
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return static_cast<double>(ens.m);
    const double nm = static_cast<double>(ens.n - ens.m);
    double total = 0.0;
    for (int j = 1; j <= ens.m; ++j) total += regularized_beta(nm, j, x);
    return total;
}

QuadResult expected_count_outside_quadrature(const KernelSpec& spec, double r,
                                             double abs_tol) {
    if (r < 0.0) throw std::invalid_argument("expected_count_outside_quadrature: negative radius");
    const double edge = spec.ensemble.scale();
    if (r >= edge) return {0.0, 0.0, 0, true};
    auto integrand = [&](double s) { return 2.0 * kPi * s * kernel_diag(spec, Complex(s, 0.0)); };
    return integrate(integrand, r, edge, abs_tol, 8000);
}

double HockeyStickSum::value() const {
    return static_cast<double>(sum_times_pi) / kPi;
}

HockeyStickSum hockey_stick_sum(const TruncationEnsemble& ensemble) {
    if (ensemble.n > kHockeyStickLimit)
        throw std::invalid_argument("hockey_stick_sum: n beyond configured exact bound");
    const unsigned n = static_cast<unsigned>(ensemble.n);
    const unsigned m = static_cast<unsigned>(ensemble.m);
    BigInt direct = 0;
    for (unsigned j = 1; j <= m; ++j) direct += binomial_exact(n - m + j - 1, j);
    BigInt closed = binomial_exact(n, m) - 1;
    HockeyStickSum out;
    out.direct_sum = direct;
    out.closed_form = closed;
    out.identity_holds = (direct == closed);
    out.sum_times_pi = BigRational(direct, 2);
    return out;
}

StirlingBounds stirling_bounds(unsigned k) {
    if (k < 1) throw std::invalid_argument("stirling_bounds: k >= 1 required");
    const double kk = static_cast<double>(k);
    const double core = (kk + 0.5) * std::log(kk) - kk;
    return {0.5 * std::log(2.0 * kPi) + core, 1.0 + core};
}

double log_binomial_upper_bound(const TruncationEnsemble& ensemble) {
    const double a = ensemble.alpha();
    const double n = static_cast<double>(ensemble.n);
    return 1.0 - std::log(2.0 * kPi) - 0.5 * std::log(n * a * (1.0 - a)) +
           n * (-(1.0 - a) * std::log1p(-a) - a * std::log(a));
}

}  // namespace trunclab
