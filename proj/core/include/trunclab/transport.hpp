#pragma once

#include <cstddef>
#include <stdexcept>

#include "trunclab/ensemble.hpp"
#include "trunclab/limit_measure.hpp"
#include "trunclab/rng.hpp"

namespace trunclab {

struct DistanceEstimate {
    enum class Method { exact_lp, sampled };
    double value = 0.0;
    double standard_error = 0.0;  // 0 for exact LP results
    Method method = Method::exact_lp;
};

struct TransportOptions {
    std::size_t max_pairs = 20'000'000;  // LP cap on |supp mu| * |supp nu|
    double tolerance = 1e-9;             // feasibility/optimality
};

class LpCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Metric { w1, dbl };

// Exact Kantorovich W1 with Euclidean ground cost, solved as a transportation
// LP (primal simplex on the transportation polytope).
DistanceEstimate w1_discrete(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                             const TransportOptions& opts = {});

// Exact bounded-Lipschitz distance: sup of int f d(mu-nu) over |f| <= 1,
// Lip(f) <= 1.  Solved as the transportation LP with the truncated metric
// min(|x-y|, 2); by Kantorovich-Rubinstein duality on the truncated metric
// this optimum coincides with the pairwise-constraint LP on the pooled
// support, which the test suite checks against an independent dense solver.
DistanceEstimate dbl_discrete(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                              const TransportOptions& opts = {});

// Distance from mu to the limit measure, estimated through an i.i.d. sample of
// size n_samples; the exact discrete distance to the sample is reported with a
// standard error from batch estimates.  The W1 estimate converges to the true
// distance from above in expectation as n_samples grows.
DistanceEstimate distance_to_limit(const EmpiricalMeasure& mu, const LimitMeasure& limit,
                                   std::size_t n_samples, RngStream& rng, Metric metric,
                                   const TransportOptions& opts = {}, int batches = 5);

// bipartite min-cost transport between nonnegative weight vectors that share a
// common total; costs supplied row-major (suppliers x consumers)
double transport_lp(const std::vector<double>& supply, const std::vector<double>& demand,
                    const std::vector<double>& cost, double tolerance = 1e-9);

}  // namespace trunclab
