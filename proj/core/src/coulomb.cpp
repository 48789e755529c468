#include "trunclab/coulomb.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace trunclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// potential of the unit uniform disc at distance d from its center
double unit_disc_potential(double d) {
    if (d >= 1.0) return -std::log(d);
    return 0.5 * (1.0 - d * d);
}

// overlap profile: disc_pair_energy(d, eps) = -log(eps) + psi(d/eps) for d < 2 eps
double overlap_profile(double t) {
    if (t <= 0.0) return 0.25;
    auto inner = [&](double s) {
        auto wrt_angle = [&](double phi) {
            const double d2 = t * t + s * s + 2.0 * t * s * std::cos(phi);
            return unit_disc_potential(std::sqrt(std::max(d2, 0.0)));
        };
        return s * integrate_or_throw(wrt_angle, 0.0, kPi, 1e-10, 2000);
    };
    return (2.0 / kPi) * integrate_or_throw(inner, 0.0, 1.0, 1e-9, 2000);
}

}  // namespace

PotentialSpec PotentialSpec::finite(const TruncationEnsemble& ensemble) {
    return {Kind::finite_n, ensemble.n, ensemble.m, ensemble.alpha()};
}

PotentialSpec PotentialSpec::limiting(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("PotentialSpec::limiting: alpha in (0,1) required");
    return {Kind::limiting, 0, 0, alpha};
}

double PotentialSpec::coefficient() const {
    if (kind == Kind::finite_n) return static_cast<double>(n - m - 1) / m;
    return 1.0 / alpha - 1.0;
}

double PotentialSpec::support_radius() const { return 1.0 / std::sqrt(alpha); }

double PotentialSpec::operator()(Complex z) const {
    const double r2 = std::norm(z);
    if (alpha * r2 >= 1.0) return kInf;
    return -coefficient() * std::log1p(-alpha * r2);
}

double hamiltonian(const TruncationEnsemble& ensemble, std::span<const Complex> z) {
    if (z.size() != static_cast<std::size_t>(ensemble.m))
        throw std::invalid_argument("hamiltonian: configuration size must equal m");
    const PotentialSpec v = PotentialSpec::finite(ensemble);
    double interaction = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        for (std::size_t k = j + 1; k < z.size(); ++k) {
            const double d = std::abs(z[j] - z[k]);
            if (d == 0.0) return kInf;
            interaction -= 2.0 * std::log(d);
        }
    }
    double confinement = 0.0;
    for (const Complex& p : z) {
        const double vp = v(p);
        if (vp == kInf) return kInf;
        confinement += vp;
    }
    return interaction + ensemble.m * confinement;
}

double coulomb_energy_discrete(const EmpiricalMeasure& mu) {
    mu.validate();
    double total = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        for (std::size_t k = j + 1; k < mu.size(); ++k) {
            const double d = std::abs(mu.points[j] - mu.points[k]);
            if (d == 0.0) return kInf;
            total -= 2.0 * mu.weights[j] * mu.weights[k] * std::log(d);
        }
    }
    return total;
}

RadialMeasure radial_measure(const LimitMeasure& mu) {
    return {1.0, [mu](double r) { return mu.radial_pdf(r); },
            [mu](double r) { return mu.radial_cdf(r); }};
}

RadialMeasure uniform_disc(double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("uniform_disc: eps > 0 required");
    return {eps, [eps](double r) { return (r < 0.0 || r > eps) ? 0.0 : 2.0 * r / (eps * eps); },
            [eps](double r) {
                if (r <= 0.0) return 0.0;
                if (r >= eps) return 1.0;
                return r * r / (eps * eps);
            }};
}

double coulomb_energy_radial(const RadialMeasure& mu, double abs_tol) {
    // E = -2 int_0^R log(s) w(s) W(s) ds by the circular average
    auto cdf = [&](double s) {
        if (mu.radial_cdf) return (*mu.radial_cdf)(s);
        return integrate_or_throw(mu.radial_pdf, 0.0, s, abs_tol / 20.0, 4000);
    };
    auto integrand = [&](double s) { return -2.0 * std::log(s) * mu.radial_pdf(s) * cdf(s); };
    return integrate_or_throw(integrand, 0.0, mu.radius, abs_tol, 4000);
}

MollifiedMeasure mollify(const EmpiricalMeasure& mu, const MollifierSpec& spec) {
    mu.validate();
    if (!(spec.epsilon > 0.0)) throw std::invalid_argument("mollify: epsilon > 0 required");
    return {mu.points, mu.weights, spec.epsilon};
}

double disc_pair_energy(double center_distance, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("disc_pair_energy: epsilon > 0 required");
    if (center_distance < 0.0)
        throw std::invalid_argument("disc_pair_energy: negative distance");
    if (center_distance >= 2.0 * epsilon) return -std::log(center_distance);
    return -std::log(epsilon) + overlap_profile(center_distance / epsilon);
}

double coulomb_energy(const MollifiedMeasure& mu) {
    const double self = -std::log(mu.epsilon) + 0.25;  // E(lambda_eps)
    double total = 0.0;
    for (std::size_t j = 0; j < mu.centers.size(); ++j) {
        total += mu.weights[j] * mu.weights[j] * self;
        for (std::size_t k = j + 1; k < mu.centers.size(); ++k) {
            const double d = std::abs(mu.centers[j] - mu.centers[k]);
            total += 2.0 * mu.weights[j] * mu.weights[k] * disc_pair_energy(d, mu.epsilon);
        }
    }
    return total;
}

double potential_disc_average(const PotentialSpec& v, Complex center, double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("potential_disc_average: epsilon > 0 required");
    if (std::abs(center) + epsilon >= v.support_radius()) return kInf;
    auto radial_average = [&](double s) {
        auto wrt_angle = [&](double phi) {
            return v(center + Complex(s * std::cos(phi), s * std::sin(phi)));
        };
        // mean over the angle, exploiting symmetry about the center ray
        const double avg = integrate_or_throw(wrt_angle, 0.0, kPi, 1e-11, 2000) / kPi;
        return avg * 2.0 * s / (epsilon * epsilon);
    };
    return integrate_or_throw(radial_average, 0.0, epsilon, 1e-10, 2000);
}

double potential_integral(const PotentialSpec& v, const LimitMeasure& mu, double abs_tol) {
    QuadResult r = mu.expect_radial([&](double s) { return v(Complex(s, 0.0)); }, abs_tol);
    if (!r.converged)
        throw QuadratureError("potential_integral: tolerance not reached");
    return r.value;
}

double modified_energy(const EmpiricalMeasure& mu, const PotentialSpec& v) {
    double e = coulomb_energy_discrete(mu);
    if (e == kInf) return kInf;
    double pot = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        const double vj = v(mu.points[j]);
        if (vj == kInf) return kInf;
        pot += mu.weights[j] * vj;
    }
    return e + pot;
}

double modified_energy(const MollifiedMeasure& mu, const PotentialSpec& v) {
    double pot = 0.0;
    for (std::size_t j = 0; j < mu.centers.size(); ++j) {
        const double vj = potential_disc_average(v, mu.centers[j], mu.epsilon);
        if (vj == kInf) return kInf;
        pot += mu.weights[j] * vj;
    }
    return coulomb_energy(mu) + pot;
}

double modified_energy(const LimitMeasure& mu, const PotentialSpec& v, double abs_tol) {
    if (v.support_radius() <= 1.0) return kInf;  // mu_alpha fills the unit disc
    return coulomb_energy_radial(radial_measure(mu), abs_tol) +
           potential_integral(v, mu, abs_tol / 10.0);
}

LemmaRegResult lemma_reg_check(const TruncationEnsemble& ensemble, std::span<const Complex> z,
                               double epsilon) {
    const double a = ensemble.alpha();
    const double eps_bound = std::pow(a / (4.0 + 2.0 * std::sqrt(a)), 2.0);
    if (!(epsilon > 0.0) || epsilon >= eps_bound)
        throw std::domain_error("lemma_reg_check: need 0 < eps < (alpha/(4+2 sqrt(alpha)))^2");
    const double radius_bound = 1.0 / std::sqrt(a) - std::sqrt(epsilon);
    for (const Complex& p : z)
        if (std::abs(p) >= radius_bound)
            throw std::domain_error("lemma_reg_check: point outside B_{1/sqrt(alpha)-sqrt(eps)}");

    const double lhs = hamiltonian(ensemble, z);
    const double m = static_cast<double>(ensemble.m);
    const MollifiedMeasure smeared =
        mollify(spectral_measure(std::vector<Complex>(z.begin(), z.end())), MollifierSpec{epsilon});
    const double ev = modified_energy(smeared, PotentialSpec::finite(ensemble));
    const double e_disc = -std::log(epsilon) + 0.25;
    const double rhs = m * m * ev - m * e_disc - m * m * (1.0 - a) * epsilon / (2.0 * a);
    const double gap = lhs - rhs;
    return {lhs, rhs, gap, gap >= 0.0};
}

double laplacian_potential(const TruncationEnsemble& ensemble, Complex y) {
    const double a = ensemble.alpha();
    const double r2 = std::norm(y);
    if (a * r2 >= 1.0)
        throw std::domain_error("laplacian_potential: point outside the support disc");
    const double t = 1.0 - a * r2;
    return 4.0 * (1.0 - a - 1.0 / ensemble.n) / (t * t);
}

double transport_constant(double big_r) {
    if (!(big_r > 0.0)) throw std::invalid_argument("transport_constant: R > 0 required");
    return 16.0 * kPi * big_r * big_r;
}

double z_lower_bound(const TruncationEnsemble& ensemble) {
    if (ensemble.m >= ensemble.n - 1)
        throw std::domain_error("z_lower_bound: unsupported for m = n-1 (exponent ratio degenerates)");
    const double a = ensemble.alpha();
    const double m = static_cast<double>(ensemble.m);
    const LimitMeasure mu(a);
    const double energy = coulomb_energy_radial(radial_measure(mu), 1e-8);
    const double pot = potential_integral(PotentialSpec::finite(ensemble), mu, 1e-9);
    const double ratio = static_cast<double>(ensemble.n - ensemble.m + 1) /
                         static_cast<double>(ensemble.n - ensemble.m - 1);
    return -m * std::log(2.0 * (1.0 - a)) - m * (m - 1.0) * energy - ratio * m * m * pot;
}

}  // namespace trunclab
