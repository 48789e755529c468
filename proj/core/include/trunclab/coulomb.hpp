#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "trunclab/ensemble.hpp"
#include "trunclab/limit_measure.hpp"

namespace trunclab {

// External potential of the Coulomb-gas form of the eigenvalue density.
// finite_n: V_{n,m}(z) = -((n-m-1)/m) log(1 - (m/n)|z|^2) on |z| < sqrt(n/m);
// limiting: V_alpha(z)  = -(1/alpha - 1) log(1 - alpha|z|^2) on |z| < 1/sqrt(alpha);
// +infinity outside (a legal return value, never an overflow artifact).
struct PotentialSpec {
    enum class Kind { finite_n, limiting };
    Kind kind;
    int n = 0, m = 0;  // finite_n only
    double alpha;      // m/n for finite_n

    static PotentialSpec finite(const TruncationEnsemble& ensemble);
    static PotentialSpec limiting(double alpha);

    double coefficient() const;     // (n-m-1)/m resp. 1/alpha - 1
    double support_radius() const;  // sqrt(n/m) resp. 1/sqrt(alpha)
    double operator()(Complex z) const;
};

// H_{n,m}(z) = sum_{j != k} log 1/|z_j - z_k| + m sum_j V_{n,m}(z_j)
double hamiltonian(const TruncationEnsemble& ensemble, std::span<const Complex> z);

// off-diagonal discrete Coulomb energy sum_{j != k} w_j w_k log 1/|x_j - x_k|
double coulomb_energy_discrete(const EmpiricalMeasure& mu);

// a rotation-invariant measure given through the density of its radius
struct RadialMeasure {
    double radius;                                   // support [0, radius]
    std::function<double(double)> radial_pdf;        // density of |z|
    std::optional<std::function<double(double)>> radial_cdf;  // optional closed form
};

RadialMeasure radial_measure(const LimitMeasure& mu);
RadialMeasure uniform_disc(double eps);  // lambda_eps

// E(mu) = iint log 1/|x-y| dmu dmu via the circular average
// int_0^{2pi} log 1/|r e^{i t} - s e^{i p}| dt = -2 pi log max(r, s)
double coulomb_energy_radial(const RadialMeasure& mu, double abs_tol = 1e-7);

struct MollifierSpec {
    double epsilon;  // radius of the uniform disc lambda_eps
};

struct MollifiedMeasure {
    std::vector<Complex> centers;
    std::vector<double> weights;
    double epsilon;
};

// convolution with lambda_eps
MollifiedMeasure mollify(const EmpiricalMeasure& mu, const MollifierSpec& spec);

// Coulomb energy between two eps-discs at center distance d: exactly
// log(1/d) once d >= 2 eps; overlapping discs reduce to a scale-free
// profile evaluated by quadrature.
double disc_pair_energy(double center_distance, double epsilon);

// finite total energy of the mollified measure (self-energies included)
double coulomb_energy(const MollifiedMeasure& mu);

// (V * lambda_eps)(center); +infinity if the disc is not strictly inside the support
double potential_disc_average(const PotentialSpec& v, Complex center, double epsilon);

// int V dmu_alpha by radial quadrature
double potential_integral(const PotentialSpec& v, const LimitMeasure& mu,
                          double abs_tol = 1e-9);

// modified energy E_V(mu) = E(mu) + int V dmu for the measure families used here
double modified_energy(const EmpiricalMeasure& mu, const PotentialSpec& v);
double modified_energy(const MollifiedMeasure& mu, const PotentialSpec& v);
double modified_energy(const LimitMeasure& mu, const PotentialSpec& v, double abs_tol = 1e-7);

struct LemmaRegResult {
    double lhs;   // H_{n,m}(z)
    double rhs;   // m^2 E_V(mollified) - m E(lambda_eps) - m^2 (1-alpha) eps / (2 alpha)
    double gap;   // lhs - rhs
    bool holds;   // gap >= 0
};

// Both sides of the regularization inequality.  Hypothesis violations
// (eps too large, или a point too close to the support edge) throw
// std::domain_error, distinct from an inequality failure.
LemmaRegResult lemma_reg_check(const TruncationEnsemble& ensemble, std::span<const Complex> z,
                               double epsilon);

// Delta V_{n,m}(y) = 4 (1 - alpha - 1/n) / (1 - alpha |y|^2)^2
double laplacian_potential(const TruncationEnsemble& ensemble, Complex y);

// Coulomb transport constant vol(B_{4R}) = 16 pi R^2
double transport_constant(double big_r);

// Jensen lower bound on log Z_{n,m} against mu_alpha; requires m < n-1
double z_lower_bound(const TruncationEnsemble& ensemble);

}  // namespace trunclab
