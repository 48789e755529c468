#include "trunclab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "trunclab/dpp_kernel.hpp"
#include "trunclab/eigensolver.hpp"
#include "trunclab/haar.hpp"
#include "trunclab/io.hpp"
#include "trunclab/stats.hpp"

namespace trunclab {

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("config: trials >= 1 required");
    if (m < 1 || m >= n) throw std::invalid_argument("config: need 1 <= m < n");
    if (workers < 1) throw std::invalid_argument("config: workers >= 1 required");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("config: format must be csv or json");
    if (metric_batches < 2) throw std::invalid_argument("config: metric_batches >= 2");
}

std::vector<double> ExperimentConfig::effective_radius_grid() const {
    if (!radius_grid.empty()) return radius_grid;
    return {1.05, 1.1, 1.2};
}

std::vector<double> ExperimentConfig::effective_r_grid() const {
    if (!r_grid.empty()) return r_grid;
    std::vector<double> grid;
    for (int k = 1; k <= 10; ++k) grid.push_back(0.1 * k);
    return grid;
}

std::vector<double> ExperimentConfig::effective_eps_grid() const {
    if (!eps_grid.empty()) return eps_grid;
    return {0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0};
}

std::size_t ExperimentConfig::effective_metric_samples() const {
    return metric_samples > 0 ? metric_samples : 10 * static_cast<std::size_t>(m);
}

void run_trials(int trials, int workers, const std::function<void(int)>& body) {
    if (workers <= 1 || trials <= 1) {
        for (int t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int count = std::min(workers, trials);
    pool.reserve(static_cast<std::size_t>(count));
    for (int w = 0; w < count; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const int t = next.fetch_add(1);
                if (t >= trials) return;
                body(t);
            }
        });
    }
    for (std::thread& th : pool) th.join();
}

namespace {

// seed -> unitary -> truncation -> eigenvalues, one trial
ExperimentRecord simulate_trial(const ExperimentConfig& config, int trial, RngStream& rng) {
    const TruncationEnsemble ens(config.n, config.m);
    ExperimentRecord rec;
    rec.trial = trial;
    rec.seed = config.seed;
    rec.n = config.n;
    rec.m = config.m;
    rec.alpha = ens.alpha();
    try {
        const ComplexMatrix u = sample_haar_unitary(config.n, rng);
        const ComplexMatrix a = truncate_and_scale(u, ens);
        rec.eigenvalues = eigenvalues(a);
    } catch (const EigenvalueError&) {
        rec.converged = false;
        return rec;
    }
    rec.max_modulus = 0.0;
    for (const Complex& z : rec.eigenvalues)
        rec.max_modulus = std::max(rec.max_modulus, std::abs(z));
    return rec;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

SpectrumResult run_spectrum_experiment(const ExperimentConfig& config) {
    config.validate();
    const TruncationEnsemble ens(config.n, config.m);

    SpectrumResult out;
    out.records.resize(static_cast<std::size_t>(config.trials));
    run_trials(config.trials, config.workers, [&](int t) {
        RngStream rng = RngStream::for_trial(config.seed, static_cast<std::uint64_t>(t));
        out.records[static_cast<std::size_t>(t)] = simulate_trial(config, t, rng);
    });

    SpectrumSummary& s = out.summary;
    s.n = config.n;
    s.m = config.m;
    s.alpha = ens.alpha();
    s.seed = config.seed;
    s.trials = config.trials;
    s.support_radius = ens.scale();
    double count_outside_unit = 0.0;
    int used = 0;
    for (const ExperimentRecord& rec : out.records) {
        if (!rec.converged) {
            ++s.flagged;
            continue;
        }
        ++used;
        s.max_modulus_overall = std::max(s.max_modulus_overall, rec.max_modulus);
        for (const Complex& z : rec.eigenvalues)
            if (std::abs(z) > 1.0) count_outside_unit += 1.0;
    }
    s.mean_count_outside_unit = used > 0 ? count_outside_unit / used : 0.0;
    s.ok = s.max_modulus_overall < ens.scale();
    return out;
}

DistanceResult run_distance_experiment(const ExperimentConfig& config) {
    config.validate();
    const TruncationEnsemble ens(config.n, config.m);
    const LimitMeasure limit(ens.alpha());

    // respect the LP cap by shrinking the surrogate sample if needed
    std::size_t n_samples = config.effective_metric_samples();
    bool subsampled = false;
    const std::size_t pair_cap = config.lp_cap;
    if (static_cast<std::size_t>(config.m) * n_samples > pair_cap) {
        n_samples = pair_cap / static_cast<std::size_t>(config.m);
        n_samples -= n_samples % static_cast<std::size_t>(config.metric_batches);
        n_samples = std::max<std::size_t>(n_samples, 10 * static_cast<std::size_t>(config.m));
        subsampled = true;
    }

    TransportOptions opts;
    opts.max_pairs = pair_cap;

    DistanceResult out;
    out.records.resize(static_cast<std::size_t>(config.trials));
    run_trials(config.trials, config.workers, [&](int t) {
        RngStream rng = RngStream::for_trial(config.seed, static_cast<std::uint64_t>(t));
        ExperimentRecord rec = simulate_trial(config, t, rng);
        if (rec.converged) {
            const EmpiricalMeasure mu = spectral_measure(rec.eigenvalues);
            const DistanceEstimate est = distance_to_limit(
                mu, limit, n_samples, rng, config.metric, opts, config.metric_batches);
            if (config.metric == Metric::dbl) {
                rec.dbl_estimate = est.value;
                rec.dbl_stderr = est.standard_error;
            } else {
                rec.w1_estimate = est.value;
                rec.w1_stderr = est.standard_error;
            }
        }
        out.records[static_cast<std::size_t>(t)] = std::move(rec);
    });

    DistanceSummary& s = out.summary;
    s.n = config.n;
    s.m = config.m;
    s.alpha = ens.alpha();
    s.seed = config.seed;
    s.trials = config.trials;
    s.metric = (config.metric == Metric::dbl) ? "dbl" : "w1";
    s.metric_samples = n_samples;
    s.subsampled = subsampled;

    std::vector<double> values;
    for (const ExperimentRecord& rec : out.records) {
        if (!rec.converged) {
            ++s.flagged;
            continue;
        }
        values.push_back(config.metric == Metric::dbl ? rec.dbl_estimate : rec.w1_estimate);
    }
    if (values.empty()) throw std::runtime_error("distance experiment: every trial flagged");
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    s.q25 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.q75 = quantile_sorted(values, 0.75);

    const DeltaM dm = delta_m(config.n, config.m);
    s.delta_m_value = dm.value;
    s.delta_m_dense_branch = dm.dense_branch;
    s.below_delta_m = s.max <= dm.value;

    s.r_grid = config.effective_r_grid();
    const double trials_used = static_cast<double>(values.size());
    for (const double r : s.r_grid) {
        const BoundReport bound = concentration_bound(ens, r);
        s.bound_values.push_back(bound.value);
        double exceed = 0.0;
        for (const double v : values)
            if (v >= r) exceed += 1.0;
        const double freq = exceed / trials_used;
        const double se = std::sqrt(std::max(freq * (1.0 - freq), 1.0 / trials_used) / trials_used);
        s.exceed_freq.push_back(freq);
        s.exceed_se.push_back(se);
        if (!bound.vacuous && freq > bound.value + 3.0 * se) s.domination_ok = false;
    }
    s.ok = s.domination_ok;
    return out;
}

EdgeResult run_edge_experiment(const ExperimentConfig& config) {
    config.validate();
    const TruncationEnsemble ens(config.n, config.m);
    const std::vector<double> grid = config.effective_radius_grid();
    const KernelSpec kernel = KernelSpec::make(ens);

    EdgeResult out;
    out.records.resize(static_cast<std::size_t>(config.trials));
    run_trials(config.trials, config.workers, [&](int t) {
        RngStream rng = RngStream::for_trial(config.seed, static_cast<std::uint64_t>(t));
        ExperimentRecord rec = simulate_trial(config, t, rng);
        if (rec.converged) {
            rec.counts_outside.reserve(grid.size());
            for (const double r : grid) {
                double count = 0.0;
                for (const Complex& z : rec.eigenvalues)
                    if (std::abs(z) > r) count += 1.0;
                rec.counts_outside.push_back(count);
            }
        }
        out.records[static_cast<std::size_t>(t)] = std::move(rec);
    });

    EdgeSummary& s = out.summary;
    s.n = config.n;
    s.m = config.m;
    s.alpha = ens.alpha();
    s.seed = config.seed;
    s.trials = config.trials;

    std::vector<const ExperimentRecord*> used;
    for (const ExperimentRecord& rec : out.records) {
        if (!rec.converged) {
            ++s.flagged;
            continue;
        }
        used.push_back(&rec);
    }
    if (used.empty()) throw std::runtime_error("edge experiment: every trial flagged");
    const double trials_used = static_cast<double>(used.size());

    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        EdgeRadiusRow row;
        row.radius = grid[gi];

        std::vector<double> counts;
        counts.reserve(used.size());
        double exceed = 0.0;
        for (const ExperimentRecord* rec : used) {
            counts.push_back(rec->counts_outside[gi]);
            if (rec->max_modulus > row.radius) exceed += 1.0;
        }
        row.mc_mean = mean(counts);
        row.mc_se = sample_stddev(counts) / std::sqrt(trials_used);
        row.expected_beta = expected_count_outside(kernel, row.radius);
        row.expected_quad = expected_count_outside_quadrature(kernel, row.radius, 1e-9).value;
        s.reduction_agreement =
            std::max(s.reduction_agreement, std::abs(row.expected_beta - row.expected_quad));

        row.p_exceed = exceed / trials_used;
        row.p_exceed_se =
            std::sqrt(std::max(row.p_exceed * (1.0 - row.p_exceed), 1.0 / trials_used) /
                      trials_used);

        const double se_floor = std::max(row.mc_se, 1e-12);
        row.count_ok = std::abs(row.mc_mean - row.expected_beta) <= 3.0 * se_floor;

        if (row.radius > 1.0) {
            const BoundReport bound = edge_bound(ens, row.radius - 1.0);
            row.edge_bound_value = bound.value;
            row.edge_bound_vacuous = bound.vacuous;
            if (!bound.vacuous && row.p_exceed > bound.value + 3.0 * row.p_exceed_se)
                row.bound_ok = false;
        }
        if (!row.count_ok || !row.bound_ok) s.ok = false;
        s.rows.push_back(row);
    }
    return out;
}

std::vector<BoundReport> run_bounds_report(const ExperimentConfig& config) {
    config.validate();
    const TruncationEnsemble ens(config.n, config.m);
    std::vector<BoundReport> reports;
    for (const double r : config.effective_r_grid())
        reports.push_back(concentration_bound(ens, r));
    for (const double eps : config.effective_eps_grid())
        reports.push_back(edge_bound(ens, eps));
    reports.push_back(simplified_tail_bound(ens));
    return reports;
}

std::vector<std::string> reproduce_figure(const ExperimentConfig& config) {
    if (config.n < 4) throw std::invalid_argument("figure: n too small");
    std::vector<std::string> written;
    int ratio_index = 0;
    for (const double ratio : config.figure_ratios) {
        int m = static_cast<int>(std::lround(ratio * config.n));
        m = std::clamp(m, 1, config.n - 1);
        const TruncationEnsemble ens(config.n, m);
        RngStream rng =
            RngStream::for_trial(config.seed, 0x0F1Du + static_cast<std::uint64_t>(ratio_index));
        const ComplexMatrix u = sample_haar_unitary(config.n, rng);
        const std::vector<Complex> eigs = eigenvalues(truncate_and_scale(u, ens));

        written.push_back(write_eigenvalue_scatter_svg(config.out_dir, ratio, eigs, ens));
        written.push_back(write_radial_histogram_svg(config.out_dir, ratio, eigs, ens));
        ++ratio_index;
    }
    return written;
}

}  // namespace trunclab
