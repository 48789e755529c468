#include "trunclab/limit_measure.hpp"

#include <cmath>
#include <stdexcept>

namespace trunclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LimitMeasure::LimitMeasure(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("LimitMeasure: alpha must lie in (0,1)");
}

double LimitMeasure::density(Complex z) const {
    const double r2 = std::norm(z);
    if (r2 >= 1.0) return 0.0;
    const double t = 1.0 - alpha_ * r2;
    return (1.0 - alpha_) / (kPi * t * t);
}

double LimitMeasure::radial_pdf(double r) const {
    if (r < 0.0 || r >= 1.0) return 0.0;
    const double t = 1.0 - alpha_ * r * r;
    return 2.0 * r * (1.0 - alpha_) / (t * t);
}

double LimitMeasure::radial_cdf(double r) const {
    if (r < 0.0) throw std::invalid_argument("radial_cdf: negative radius");
    if (r >= 1.0) return 1.0;
    const double r2 = r * r;
    return (1.0 - alpha_) * r2 / (1.0 - alpha_ * r2);
}

double LimitMeasure::radial_quantile(double u) const {
    if (u < 0.0 || u > 1.0) throw std::invalid_argument("radial_quantile: u outside [0,1]");
    return std::sqrt(u / (1.0 - alpha_ + alpha_ * u));
}

Complex LimitMeasure::sample(RngStream& rng) const {
    const double u = rng.uniform();
    const double theta = 2.0 * kPi * rng.uniform();
    const double r = radial_quantile(u);
    return {r * std::cos(theta), r * std::sin(theta)};
}

QuadResult LimitMeasure::expect_radial(const std::function<double(double)>& g,
                                       double abs_tol) const {
    // substitute u = alpha r^2: E[g(|z|)] = int_0^alpha g(sqrt(u/alpha)) (1-alpha)/(alpha (1-u)^2) du
    const double a = alpha_;
    auto integrand = [&](double u) {
        const double t = 1.0 - u;
        return g(std::sqrt(u / a)) * (1.0 - a) / (a * t * t);
    };
    return integrate(integrand, 0.0, a, abs_tol);
}

QuadResult LimitMeasure::expectation(const std::function<double(Complex)>& g,
                                     double abs_tol) const {
    const double inner_tol = std::max(1e-13, abs_tol / 8.0);
    auto angular_average = [&](double r) {
        // doubling trapezoid; exact for band-limited angular dependence
        std::size_t n = 16;
        double prev = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double th = 2.0 * kPi * i / n;
            prev += g({r * std::cos(th), r * std::sin(th)});
        }
        prev /= n;
        while (n < 16384) {
            n *= 2;
            double sum = 0.0;
            for (std::size_t i = 1; i < n; i += 2) {
                const double th = 2.0 * kPi * i / n;
                sum += g({r * std::cos(th), r * std::sin(th)});
            }
            const double cur = 0.5 * prev + sum / n;
            if (std::abs(cur - prev) < inner_tol) return cur;
            prev = cur;
        }
        return prev;
    };
    QuadResult r = expect_radial(angular_average, abs_tol);
    if (!r.converged)
        throw QuadratureError("LimitMeasure::expectation: radial tolerance not reached");
    return r;
}

}  // namespace trunclab
