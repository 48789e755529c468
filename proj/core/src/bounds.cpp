#include "trunclab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace trunclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kExpOverflow = 709.0;  // exp() overflows past this

double log_sum_exp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double safe_exp(double log_x, bool& overflowed) {
    if (log_x > kExpOverflow) {
        overflowed = true;
        return kInf;
    }
    return std::exp(log_x);
}

}  // namespace

double BoundReport::component(const std::string& key) const {
    for (const auto& [k, v] : components)
        if (k == key) return v;
    throw std::out_of_range("BoundReport: no component named " + key);
}

double eta_alpha(double alpha) { return std::sqrt(3.0 + std::log(1.0 / alpha)) - 1.0; }

double c_alpha(double alpha) {
    const double one_plus_eta = 1.0 + eta_alpha(alpha);
    return 1.0 / (128.0 * kPi * one_plus_eta * one_plus_eta);
}

double c_alpha_prime(double alpha) { return 6.0 + 3.0 * std::log(1.0 / alpha); }

BoundReport concentration_bound(const TruncationEnsemble& ensemble, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("concentration_bound: r > 0 required");
    const double a = ensemble.alpha();
    const double m = static_cast<double>(ensemble.m);
    const double ca = c_alpha(a);
    const double cpa = c_alpha_prime(a);
    const double log_main = 2.0 - ca * m * m * r * r + 2.0 * m * std::log(m) + cpa * m;
    const double log_tail =
        1.0 - std::log(2.0 * kPi) + 0.5 * std::log(m / (1.0 - a)) - m;
    const double log_total = log_sum_exp(log_main, log_tail);

    BoundReport out;
    out.name = "concentration";
    out.n = ensemble.n;
    out.m = ensemble.m;
    out.parameter = r;
    out.log_value = log_total;
    out.value = safe_exp(log_total, out.overflowed);
    out.vacuous = out.value >= 1.0;
    out.components = {{"C_alpha", ca},
                      {"C_alpha_prime", cpa},
                      {"C_alpha_prime_union_small_m", 9.0 * std::log(1.0 / a)},
                      {"eta_alpha", eta_alpha(a)},
                      {"log_main_term", log_main},
                      {"log_tail_term", log_tail}};
    return out;
}

BoundReport edge_bound(const TruncationEnsemble& ensemble, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("edge_bound: eps > 0 required");
    const double a = ensemble.alpha();
    const double n = static_cast<double>(ensemble.n);
    const double m = static_cast<double>(ensemble.m);

    BoundReport out;
    out.name = "edge";
    out.n = ensemble.n;
    out.m = ensemble.m;
    out.parameter = eps;

    if (eps >= 1.0 / std::sqrt(a) - 1.0) {
        out.value = 0.0;
        out.log_value = -kInf;
        out.vacuous = false;
        out.components = {{"q", a * (1.0 + eps) * (1.0 + eps)}};
        return out;
    }

    const double q = a * (1.0 + eps) * (1.0 + eps);  // q < 1 here
    // 1 - q^m = -expm1(m log q)
    const double log_one_minus_qm = std::log(-std::expm1(m * std::log(q)));
    const double log_prefactor = 1.0 - std::log(2.0 * kPi) -
                                 0.5 * std::log(n * a * (1.0 - a)) + log_one_minus_qm -
                                 std::log1p(-q);
    const double log_bracket =
        (1.0 - a) * std::log1p(-q) - (1.0 - a) * std::log1p(-a) - a * std::log(a);
    const double log_total = log_prefactor + n * log_bracket;

    out.log_value = log_total;
    out.value = safe_exp(log_total, out.overflowed);
    out.vacuous = out.value >= 1.0;
    out.components = {{"q", q},
                      {"log_prefactor", log_prefactor},
                      {"log_bracket", log_bracket}};
    return out;
}

BoundReport simplified_tail_bound(const TruncationEnsemble& ensemble) {
    const double a = ensemble.alpha();
    const double m = static_cast<double>(ensemble.m);
    const double log_total =
        1.0 - std::log(2.0 * kPi) + 0.5 * std::log(m / (1.0 - a)) - m;
    BoundReport out;
    out.name = "simplified_tail";
    out.n = ensemble.n;
    out.m = ensemble.m;
    out.parameter = 0.0;
    out.log_value = log_total;
    out.value = safe_exp(log_total, out.overflowed);
    out.vacuous = out.value >= 1.0;
    return out;
}

double epsilon_threshold(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("epsilon_threshold: alpha in (0,1) required");
    // (alpha/e)^{alpha/(1-alpha)} in log space for small alpha
    const double power = std::exp(alpha / (1.0 - alpha) * (std::log(alpha) - 1.0));
    const double squared = (1.0 - (1.0 - alpha) * power) / alpha;
    return std::sqrt(squared) - 1.0;
}

DeltaM delta_m(int n, int m) {
    if (m < 1 || m >= n) throw std::invalid_argument("delta_m: need 1 <= m < n");
    DeltaM out;
    out.dense_branch = static_cast<double>(m) >= static_cast<double>(n) / std::exp(1.0);
    if (out.dense_branch && m < 2)
        throw std::invalid_argument("delta_m: dense branch needs m >= 2 (log m > 0)");
    const double md = static_cast<double>(m);
    if (m >= 2) out.dense_value = 48.0 * std::sqrt(2.0 * kPi * std::log(md) / md);
    out.sparse_value = 165.0 *
                       std::sqrt(std::log(static_cast<double>(n) / md) *
                                 std::log(static_cast<double>(n))) /
                       std::sqrt(md);
    out.value = out.dense_branch ? out.dense_value : out.sparse_value;
    return out;
}

MollifierChoice mollifier_epsilon_choice(const TruncationEnsemble& ensemble) {
    const double a = ensemble.alpha();
    const double m = static_cast<double>(ensemble.m);
    const double one_plus_eta = 1.0 + eta_alpha(a);
    const double root_a = std::sqrt(a);

    MollifierChoice out;
    out.terms[0] = std::pow(a / (2.0 * (2.0 + root_a)), 2.0);
    const double gap = 1.0 / root_a - one_plus_eta;
    out.terms[1] = gap * gap;
    out.terms[2] = 8.0 * std::sqrt(kPi) * one_plus_eta / m;
    out.terms[3] = one_plus_eta;
    out.terms[4] = 2.0 * a / ((1.0 - a) * m * m);
    out.eta_below_support = gap > 0.0;
    if (out.terms[1] <= 0.0)
        throw std::domain_error("mollifier_epsilon_choice: second min-term vanished");

    out.argmin = 0;
    for (int k = 1; k < 5; ++k)
        if (out.terms[static_cast<std::size_t>(k)] < out.terms[static_cast<std::size_t>(out.argmin)])
            out.argmin = k;
    out.epsilon = out.terms[static_cast<std::size_t>(out.argmin)];
    return out;
}

}  // namespace trunclab
