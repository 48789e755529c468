#pragma once

#include <functional>

#include "trunclab/ensemble.hpp"
#include "trunclab/quadrature.hpp"
#include "trunclab/rng.hpp"

namespace trunclab {

// The limiting spectral measure on the unit disc with density
// f_alpha(z) = (1-alpha) / (pi (1-alpha|z|^2)^2).  The closed-form radial
// CDF and its inverse are implementer-derived from the density; the test
// suite cross-checks them against quadrature before anything relies on them.
class LimitMeasure {
public:
    explicit LimitMeasure(double alpha);

    double alpha() const { return alpha_; }

    double density(Complex z) const;
    double radial_pdf(double r) const;  // density of |z|: 2 pi r f(r)
    double radial_cdf(double r) const;  // F(r) = (1-alpha) r^2 / (1 - alpha r^2) on [0,1]
    double radial_quantile(double u) const;

    Complex sample(RngStream& rng) const;

    // E[g(|z|)] by adaptive quadrature on the u = alpha r^2 axis, which keeps
    // the alpha -> 1 boundary blow-up polynomial.
    QuadResult expect_radial(const std::function<double(double)>& g,
                             double abs_tol = 1e-8) const;

    // E[g(z)] for general integrands: adaptive radial quadrature of adaptive
    // angular averages.  Throws QuadratureError if the tolerance is missed.
    QuadResult expectation(const std::function<double(Complex)>& g,
                           double abs_tol = 1e-8) const;

private:
    double alpha_;
};

}  // namespace trunclab
