// trunclab: Monte Carlo and exact analytics for spectra of truncated
// Haar-random unitary matrices.
//
// Exit codes: 0 success, 1 usage/I-O errors, 2 assertion failure inside an
// experiment (Monte Carlo disagreeing with the exact analytics, or a proven
// bound violated).

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "trunclab/experiment.hpp"
#include "trunclab/io.hpp"

namespace {

using namespace trunclab;

std::string out_path(const ExperimentConfig& config, const std::string& name) {
    std::filesystem::create_directories(config.out_dir);
    return (std::filesystem::path(config.out_dir) / name).string();
}

void emit_records(const ExperimentConfig& config, const std::vector<ExperimentRecord>& records,
                  const std::vector<double>& radius_grid) {
    if (config.format == "json")
        emit_records_json(records, radius_grid, out_path(config, "records.json"));
    else
        emit_records_csv(records, radius_grid, out_path(config, "records.csv"));
}

void add_common_flags(CLI::App* cmd, ExperimentConfig& config, std::string& config_file) {
    cmd->add_option("--config", config_file, "config file (JSON or key=value) mirroring flags");
    cmd->add_option("--n", config.n, "matrix dimension n");
    cmd->add_option("--m", config.m, "truncation dimension m");
    cmd->add_option("--trials", config.trials, "number of Monte Carlo trials");
    cmd->add_option("--seed", config.seed, "master seed; trial streams derive from it");
    cmd->add_option("--workers", config.workers, "worker threads (results do not depend on this)");
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--format", config.format, "records format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--lp-cap", config.lp_cap, "max LP pair count before subsampling");
}

// flags given on the command line override the config file
ExperimentConfig resolve_config(const CLI::App* cmd, const ExperimentConfig& cli_values,
                                const std::string& config_file, const std::string& kind) {
    ExperimentConfig config = cli_values;
    if (!config_file.empty()) {
        ExperimentConfig from_file = load_config_file(config_file);
        from_file.kind = kind;
        auto keep = [&](const std::string& flag) { return cmd->count("--" + flag) > 0; };
        if (keep("n")) from_file.n = cli_values.n;
        if (keep("m")) from_file.m = cli_values.m;
        if (keep("trials")) from_file.trials = cli_values.trials;
        if (keep("seed")) from_file.seed = cli_values.seed;
        if (keep("workers")) from_file.workers = cli_values.workers;
        if (keep("out")) from_file.out_dir = cli_values.out_dir;
        if (keep("format")) from_file.format = cli_values.format;
        if (keep("lp-cap")) from_file.lp_cap = cli_values.lp_cap;
        if (keep("metric")) from_file.metric = cli_values.metric;
        if (keep("metric-samples")) from_file.metric_samples = cli_values.metric_samples;
        if (keep("radius-grid")) from_file.radius_grid = cli_values.radius_grid;
        if (keep("r-grid")) from_file.r_grid = cli_values.r_grid;
        if (keep("eps-grid")) from_file.eps_grid = cli_values.eps_grid;
        config = from_file;
    }
    config.kind = kind;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated Haar-unitary spectral laboratory"};
    app.require_subcommand(1);

    ExperimentConfig config;
    std::string config_file;
    std::string metric_name = "dbl";

    auto* spectrum = app.add_subcommand("spectrum", "sample spectra and emit records");
    add_common_flags(spectrum, config, config_file);

    auto* distance = app.add_subcommand(
        "distance", "estimate transport distances to the limiting measure");
    add_common_flags(distance, config, config_file);
    distance->add_option("--metric", metric_name, "w1 or dbl")
        ->check(CLI::IsMember({"w1", "dbl"}));
    distance->add_option("--metric-samples", config.metric_samples,
                         "surrogate sample size from mu_alpha (default 10*m)");
    distance->add_option("--r-grid", config.r_grid, "radii for concentration bounds")
        ->delimiter(',');

    auto* edge = app.add_subcommand("edge", "counts outside radii vs kernel analytics");
    add_common_flags(edge, config, config_file);
    edge->add_option("--radius-grid", config.radius_grid, "radii to monitor")->delimiter(',');

    auto* bounds = app.add_subcommand("bounds", "evaluate the explicit bound formulas");
    add_common_flags(bounds, config, config_file);
    bounds->add_option("--r-grid", config.r_grid, "radii for the concentration bound")
        ->delimiter(',');
    bounds->add_option("--eps-grid", config.eps_grid, "excess radii for the edge bound")
        ->delimiter(',');

    auto* figure = app.add_subcommand("figure", "eigenvalue scatter and radial-law SVGs");
    add_common_flags(figure, config, config_file);
    figure->add_option("--ratios", config.figure_ratios, "m/n ratios to draw")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) {
            ExperimentConfig cfg = resolve_config(spectrum, config, config_file, "spectrum");
            SpectrumResult result = run_spectrum_experiment(cfg);
            emit_records(cfg, result.records, {});
            write_spectrum_summary(result.summary, out_path(cfg, "summary.json"));
            std::printf("spectrum: %d trials at (n,m)=(%d,%d), max modulus %.6f, flagged %d\n",
                        result.summary.trials, cfg.n, cfg.m,
                        result.summary.max_modulus_overall, result.summary.flagged);
            return result.summary.ok ? 0 : 2;
        }
        if (distance->parsed()) {
            config.metric = (metric_name == "w1") ? Metric::w1 : Metric::dbl;
            ExperimentConfig cfg = resolve_config(distance, config, config_file, "distance");
            DistanceResult result = run_distance_experiment(cfg);
            emit_records(cfg, result.records, {});
            write_distance_summary(result.summary, out_path(cfg, "summary.json"));
            std::printf("distance(%s): median %.5f max %.5f delta_m %.5f flagged %d%s\n",
                        result.summary.metric.c_str(), result.summary.median,
                        result.summary.max, result.summary.delta_m_value,
                        result.summary.flagged,
                        result.summary.subsampled ? " (subsampled)" : "");
            if (!result.summary.domination_ok)
                std::fprintf(stderr, "bound violation: exceedance above concentration bound\n");
            return result.summary.ok ? 0 : 2;
        }
        if (edge->parsed()) {
            ExperimentConfig cfg = resolve_config(edge, config, config_file, "edge");
            EdgeResult result = run_edge_experiment(cfg);
            emit_records(cfg, result.records, cfg.effective_radius_grid());
            write_edge_summary(result.summary, out_path(cfg, "summary.json"));
            for (const EdgeRadiusRow& row : result.summary.rows)
                std::printf("r=%.4f  mc %.5f +- %.5f  kernel %.5f  P[max>r] %.5f  %s\n",
                            row.radius, row.mc_mean, row.mc_se, row.expected_beta,
                            row.p_exceed, (row.count_ok && row.bound_ok) ? "ok" : "MISMATCH");
            return result.summary.ok ? 0 : 2;
        }
        if (bounds->parsed()) {
            ExperimentConfig cfg = resolve_config(bounds, config, config_file, "bounds");
            std::vector<BoundReport> reports = run_bounds_report(cfg);
            if (cfg.format == "json")
                write_bounds_report_json(reports, out_path(cfg, "bounds.json"));
            else
                write_bounds_report_csv(reports, out_path(cfg, "bounds.csv"));
            for (const BoundReport& b : reports)
                std::printf("%-16s param=%.4f  value=%.6g  log=%.6g%s\n", b.name.c_str(),
                            b.parameter, b.value, b.log_value, b.vacuous ? "  (vacuous)" : "");
            return 0;
        }
        if (figure->parsed()) {
            ExperimentConfig cfg = resolve_config(figure, config, config_file, "figure");
            if (cfg.n == 100 && figure->count("--n") == 0) cfg.n = 400;
            std::vector<std::string> files = reproduce_figure(cfg);
            for (const std::string& f : files) std::printf("wrote %s\n", f.c_str());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
