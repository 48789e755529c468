#include "trunclab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "trunclab/stats.hpp"

namespace trunclab {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

// Primal transportation simplex with a spanning-tree basis.  Suppliers are
// nodes 0..a-1, consumers a..a+b-1; arc (i,j) has id i*b+j.
class TransportSimplex {
public:
    TransportSimplex(const std::vector<double>& supply, const std::vector<double>& demand,
                     const std::vector<double>& cost, double tol)
        : a_(supply.size()),
          b_(demand.size()),
          nodes_(a_ + b_),
          supply_(supply),
          demand_(demand),
          cost_(cost),
          tol_(tol) {}

    double solve() {
        double cmax = 0.0;
        for (double c : cost_) cmax = std::max(cmax, std::abs(c));
        rc_tol_ = tol_ * std::max(1.0, cmax);

        flow_.assign(a_ * b_, 0.0);
        basic_.assign(a_ * b_, 0);
        adjacency_.assign(nodes_, {});
        potential_.assign(nodes_, 0.0);
        parent_node_.assign(nodes_, kNone);
        parent_arc_.assign(nodes_, kNone);
        visit_stamp_.assign(nodes_, 0);

        northwest_init();
        compute_potentials();

        const std::size_t total = a_ * b_;
        const std::size_t block = std::max<std::size_t>(std::min(total, b_), 2048);
        std::size_t scan_pos = 0;
        long degenerate_run = 0;
        bool bland = false;

        while (true) {
            std::uint32_t enter = kNone;
            if (!bland) {
                double best = -rc_tol_;
                std::size_t scanned = 0;
                while (scanned < total) {
                    const std::size_t chunk = std::min(block, total - scanned);
                    for (std::size_t t = 0; t < chunk; ++t) {
                        const std::size_t e = scan_pos + t < total ? scan_pos + t
                                                                   : scan_pos + t - total;
                        if (basic_[e]) continue;
                        const double rc =
                            cost_[e] - potential_[e / b_] - potential_[a_ + e % b_];
                        if (rc < best) {
                            best = rc;
                            enter = static_cast<std::uint32_t>(e);
                        }
                    }
                    scanned += chunk;
                    scan_pos += chunk;
                    if (scan_pos >= total) scan_pos -= total;
                    if (enter != kNone) break;
                }
            } else {
                for (std::size_t e = 0; e < total; ++e) {
                    if (basic_[e]) continue;
                    const double rc = cost_[e] - potential_[e / b_] - potential_[a_ + e % b_];
                    if (rc < -rc_tol_) {
                        enter = static_cast<std::uint32_t>(e);
                        break;
                    }
                }
            }
            if (enter == kNone) break;

            const double theta = pivot(enter);
            if (theta <= 0.0) {
                if (++degenerate_run > 4 * static_cast<long>(nodes_)) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }
            compute_potentials();
        }

        double objective = 0.0;
        for (std::size_t e = 0; e < total; ++e)
            if (basic_[e]) objective += flow_[e] * cost_[e];
        return objective;
    }

private:
    void add_arc(std::uint32_t e, double f) {
        basic_[e] = 1;
        flow_[e] = f;
        const std::uint32_t i = e / static_cast<std::uint32_t>(b_);
        const std::uint32_t j = static_cast<std::uint32_t>(a_) + e % static_cast<std::uint32_t>(b_);
        adjacency_[i].push_back(e);
        adjacency_[j].push_back(e);
    }

    void drop_arc(std::uint32_t e) {
        basic_[e] = 0;
        flow_[e] = 0.0;
        const std::uint32_t i = e / static_cast<std::uint32_t>(b_);
        const std::uint32_t j = static_cast<std::uint32_t>(a_) + e % static_cast<std::uint32_t>(b_);
        auto& ai = adjacency_[i];
        ai.erase(std::find(ai.begin(), ai.end(), e));
        auto& aj = adjacency_[j];
        aj.erase(std::find(aj.begin(), aj.end(), e));
    }

    // northwest-corner start: exactly a+b-1 basic arcs, degenerate ones included
    void northwest_init() {
        std::vector<double> s = supply_, d = demand_;
        std::size_t i = 0, j = 0;
        while (true) {
            const double q = std::min(s[i], d[j]);
            add_arc(static_cast<std::uint32_t>(i * b_ + j), q);
            s[i] -= q;
            d[j] -= q;
            if (i + 1 == a_ && j + 1 == b_) break;
            if (i + 1 == a_) {
                ++j;
            } else if (j + 1 == b_) {
                ++i;
            } else if (s[i] <= d[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }

    void compute_potentials() {
        ++stamp_;
        potential_[0] = 0.0;
        visit_stamp_[0] = stamp_;
        stack_.clear();
        stack_.push_back(0);
        while (!stack_.empty()) {
            const std::uint32_t node = stack_.back();
            stack_.pop_back();
            for (const std::uint32_t e : adjacency_[node]) {
                const std::uint32_t i = e / static_cast<std::uint32_t>(b_);
                const std::uint32_t j =
                    static_cast<std::uint32_t>(a_) + e % static_cast<std::uint32_t>(b_);
                const std::uint32_t other = (node == i) ? j : i;
                if (visit_stamp_[other] == stamp_) continue;
                potential_[other] = cost_[e] - potential_[node];
                visit_stamp_[other] = stamp_;
                stack_.push_back(other);
            }
        }
    }

    // returns theta moved around the cycle
    double pivot(std::uint32_t enter) {
        const std::uint32_t si = enter / static_cast<std::uint32_t>(b_);
        const std::uint32_t cj =
            static_cast<std::uint32_t>(a_) + enter % static_cast<std::uint32_t>(b_);

        // tree path cj -> si
        ++stamp_;
        visit_stamp_[si] = stamp_;
        parent_node_[si] = kNone;
        stack_.clear();
        stack_.push_back(si);
        while (!stack_.empty()) {
            const std::uint32_t node = stack_.back();
            stack_.pop_back();
            if (node == cj) break;
            for (const std::uint32_t e : adjacency_[node]) {
                const std::uint32_t i = e / static_cast<std::uint32_t>(b_);
                const std::uint32_t j =
                    static_cast<std::uint32_t>(a_) + e % static_cast<std::uint32_t>(b_);
                const std::uint32_t other = (node == i) ? j : i;
                if (visit_stamp_[other] == stamp_) continue;
                visit_stamp_[other] = stamp_;
                parent_node_[other] = node;
                parent_arc_[other] = e;
                stack_.push_back(other);
            }
        }

        // walk back from cj, signs alternate -,+,-,... along the path
        cycle_arcs_.clear();
        cycle_signs_.clear();
        std::uint32_t node = cj;
        int sign = -1;
        while (node != si) {
            cycle_arcs_.push_back(parent_arc_[node]);
            cycle_signs_.push_back(sign);
            sign = -sign;
            node = parent_node_[node];
        }

        double theta = std::numeric_limits<double>::infinity();
        std::uint32_t leave = kNone;
        for (std::size_t k = 0; k < cycle_arcs_.size(); ++k) {
            if (cycle_signs_[k] < 0 && flow_[cycle_arcs_[k]] < theta) {
                theta = flow_[cycle_arcs_[k]];
                leave = cycle_arcs_[k];
            }
        }

        for (std::size_t k = 0; k < cycle_arcs_.size(); ++k)
            flow_[cycle_arcs_[k]] += cycle_signs_[k] * theta;
        drop_arc(leave);
        add_arc(enter, theta);
        return theta;
    }

    std::size_t a_, b_, nodes_;
    std::vector<double> supply_, demand_, cost_;
    double tol_, rc_tol_ = 0.0;

    std::vector<double> flow_;
    std::vector<char> basic_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::vector<double> potential_;
    std::vector<std::uint32_t> parent_node_, parent_arc_;
    std::vector<std::uint32_t> visit_stamp_;
    std::uint32_t stamp_ = 0;
    std::vector<std::uint32_t> stack_;
    std::vector<std::uint32_t> cycle_arcs_;
    std::vector<int> cycle_signs_;
};

std::vector<double> pairwise_costs(const std::vector<Complex>& xs, const std::vector<Complex>& ys,
                                   bool truncate_at_two) {
    std::vector<double> cost;
    cost.reserve(xs.size() * ys.size());
    for (const Complex& x : xs) {
        for (const Complex& y : ys) {
            double d = std::abs(x - y);
            if (truncate_at_two && d > 2.0) d = 2.0;
            cost.push_back(d);
        }
    }
    return cost;
}

DistanceEstimate discrete_distance(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                                   bool truncate_at_two, const TransportOptions& opts) {
    mu.validate();
    nu.validate();
    if (mu.size() * nu.size() > opts.max_pairs)
        throw LpCapExceeded("transport LP of " + std::to_string(mu.size()) + " x " +
                            std::to_string(nu.size()) + " pairs exceeds cap " +
                            std::to_string(opts.max_pairs));

    // canonical orientation: fewer points on the supplier side
    const EmpiricalMeasure& small = (mu.size() <= nu.size()) ? mu : nu;
    const EmpiricalMeasure& large = (mu.size() <= nu.size()) ? nu : mu;

    std::vector<double> cost = pairwise_costs(small.points, large.points, truncate_at_two);
    TransportSimplex lp(small.weights, large.weights, cost, opts.tolerance);
    double value = lp.solve();
    if (value < 0.0 && value > -opts.tolerance) value = 0.0;
    return {value, 0.0, DistanceEstimate::Method::exact_lp};
}

}  // namespace

double transport_lp(const std::vector<double>& supply, const std::vector<double>& demand,
                    const std::vector<double>& cost, double tolerance) {
    if (supply.empty() || demand.empty() || cost.size() != supply.size() * demand.size())
        throw std::invalid_argument("transport_lp: inconsistent sizes");
    TransportSimplex lp(supply, demand, cost, tolerance);
    return lp.solve();
}

DistanceEstimate w1_discrete(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                             const TransportOptions& opts) {
    return discrete_distance(mu, nu, /*truncate_at_two=*/false, opts);
}

DistanceEstimate dbl_discrete(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                              const TransportOptions& opts) {
    return discrete_distance(mu, nu, /*truncate_at_two=*/true, opts);
}

DistanceEstimate distance_to_limit(const EmpiricalMeasure& mu, const LimitMeasure& limit,
                                   std::size_t n_samples, RngStream& rng, Metric metric,
                                   const TransportOptions& opts, int batches) {
    mu.validate();
    if (n_samples < 10 * mu.size())
        throw std::invalid_argument("distance_to_limit: need n_samples >= 10 * |supp mu|");
    if (batches < 2) throw std::invalid_argument("distance_to_limit: need >= 2 batches");

    std::vector<Complex> pts(n_samples);
    for (Complex& p : pts) p = limit.sample(rng);

    auto solve = [&](std::vector<Complex> sample_pts) {
        EmpiricalMeasure nu = EmpiricalMeasure::uniform_on(std::move(sample_pts));
        return (metric == Metric::w1) ? w1_discrete(mu, nu, opts) : dbl_discrete(mu, nu, opts);
    };

    const double full_value = solve(pts).value;

    std::vector<double> batch_values;
    batch_values.reserve(static_cast<std::size_t>(batches));
    const std::size_t per_batch = n_samples / static_cast<std::size_t>(batches);
    for (int k = 0; k < batches; ++k) {
        const std::size_t lo = static_cast<std::size_t>(k) * per_batch;
        const std::size_t hi = (k + 1 == batches) ? n_samples : lo + per_batch;
        batch_values.push_back(
            solve(std::vector<Complex>(pts.begin() + lo, pts.begin() + hi)).value);
    }
    const double se = sample_stddev(batch_values) / std::sqrt(static_cast<double>(batches));
    return {full_value, se, DistanceEstimate::Method::sampled};
}

}  // namespace trunclab
