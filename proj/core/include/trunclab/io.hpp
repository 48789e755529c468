#pragma once

#include <string>
#include <vector>

#include "trunclab/experiment.hpp"

namespace trunclab {

// Stable record serialization.  CSV columns:
//   trial,n,m,alpha,seed,converged,max_modulus,
//   dbl_estimate,dbl_stderr,w1_estimate,w1_stderr,
//   counts_outside,eig_re,eig_im,bounds
// List-valued fields are semicolon-joined inside one column; bounds are
// name=value pairs.  JSON files carry a top-level "schema": 1.
void emit_records_csv(const std::vector<ExperimentRecord>& records,
                      const std::vector<double>& radius_grid, const std::string& path);
void emit_records_json(const std::vector<ExperimentRecord>& records,
                       const std::vector<double>& radius_grid, const std::string& path);
std::vector<ExperimentRecord> parse_records_json(const std::string& path);

void write_spectrum_summary(const SpectrumSummary& summary, const std::string& path);
void write_distance_summary(const DistanceSummary& summary, const std::string& path);
void write_edge_summary(const EdgeSummary& summary, const std::string& path);
void write_bounds_report_json(const std::vector<BoundReport>& reports, const std::string& path);
void write_bounds_report_csv(const std::vector<BoundReport>& reports, const std::string& path);

// one trial's eigenvalues with the unit and support circles overlaid
std::string write_eigenvalue_scatter_svg(const std::string& out_dir, double ratio,
                                         const std::vector<Complex>& eigenvalues,
                                         const TruncationEnsemble& ensemble);
// radial histogram with the limiting radial density overlaid
std::string write_radial_histogram_svg(const std::string& out_dir, double ratio,
                                       const std::vector<Complex>& eigenvalues,
                                       const TruncationEnsemble& ensemble);

// config files mirror the CLI flags, either as JSON or as flat key=value lines
ExperimentConfig load_config_file(const std::string& path);
void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value);

}  // namespace trunclab
