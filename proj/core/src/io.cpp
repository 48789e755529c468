#include "trunclab/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trunclab/limit_measure.hpp"

namespace trunclab {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string join(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ';';
        out += fmt(xs[i]);
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

Json record_to_json(const ExperimentRecord& rec) {
    Json j;
    j["trial"] = rec.trial;
    j["seed"] = rec.seed;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["alpha"] = rec.alpha;
    j["converged"] = rec.converged;
    j["max_modulus"] = rec.max_modulus;
    Json re = Json::array(), im = Json::array();
    for (const Complex& z : rec.eigenvalues) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    j["eig_re"] = std::move(re);
    j["eig_im"] = std::move(im);
    j["counts_outside"] = rec.counts_outside;
    j["dbl_estimate"] = rec.dbl_estimate;
    j["dbl_stderr"] = rec.dbl_stderr;
    j["w1_estimate"] = rec.w1_estimate;
    j["w1_stderr"] = rec.w1_stderr;
    Json bounds = Json::object();
    for (const auto& [k, v] : rec.bound_values) bounds[k] = v;
    j["bounds"] = std::move(bounds);
    return j;
}

// NaN round-trips through JSON as null
double json_double(const Json& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    return j.get<double>();
}

}  // namespace

void emit_records_csv(const std::vector<ExperimentRecord>& records,
                      const std::vector<double>& radius_grid, const std::string& path) {
    std::ostringstream out;
    out << "trial,n,m,alpha,seed,converged,max_modulus,dbl_estimate,dbl_stderr,"
           "w1_estimate,w1_stderr,counts_outside,eig_re,eig_im,bounds\n";
    for (const ExperimentRecord& rec : records) {
        out << rec.trial << ',' << rec.n << ',' << rec.m << ',' << fmt(rec.alpha) << ','
            << rec.seed << ',' << (rec.converged ? 1 : 0) << ',' << fmt(rec.max_modulus) << ','
            << fmt(rec.dbl_estimate) << ',' << fmt(rec.dbl_stderr) << ','
            << fmt(rec.w1_estimate) << ',' << fmt(rec.w1_stderr) << ',';
        out << '"';
        for (std::size_t i = 0; i < rec.counts_outside.size(); ++i) {
            if (i) out << ';';
            out << fmt(radius_grid[i]) << ':' << fmt(rec.counts_outside[i]);
        }
        out << "\",\"";
        std::vector<double> re, im;
        re.reserve(rec.eigenvalues.size());
        im.reserve(rec.eigenvalues.size());
        for (const Complex& z : rec.eigenvalues) {
            re.push_back(z.real());
            im.push_back(z.imag());
        }
        out << join(re) << "\",\"" << join(im) << "\",\"";
        for (std::size_t i = 0; i < rec.bound_values.size(); ++i) {
            if (i) out << ';';
            out << rec.bound_values[i].first << '=' << fmt(rec.bound_values[i].second);
        }
        out << "\"\n";
    }
    write_file(path, out.str());
}

void emit_records_json(const std::vector<ExperimentRecord>& records,
                       const std::vector<double>& radius_grid, const std::string& path) {
    Json root;
    root["schema"] = 1;
    root["radius_grid"] = radius_grid;
    Json arr = Json::array();
    for (const ExperimentRecord& rec : records) arr.push_back(record_to_json(rec));
    root["records"] = std::move(arr);
    write_file(path, root.dump(1) + "\n");
}

std::vector<ExperimentRecord> parse_records_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    Json root = Json::parse(in);
    if (!root.contains("schema") || root["schema"].get<int>() != 1)
        throw std::runtime_error("unsupported records schema in " + path);
    std::vector<ExperimentRecord> records;
    for (const Json& j : root["records"]) {
        ExperimentRecord rec;
        rec.trial = j["trial"].get<int>();
        rec.seed = j["seed"].get<std::uint64_t>();
        rec.n = j["n"].get<int>();
        rec.m = j["m"].get<int>();
        rec.alpha = j["alpha"].get<double>();
        rec.converged = j["converged"].get<bool>();
        rec.max_modulus = j["max_modulus"].get<double>();
        const auto& re = j["eig_re"];
        const auto& im = j["eig_im"];
        for (std::size_t i = 0; i < re.size(); ++i)
            rec.eigenvalues.emplace_back(re[i].get<double>(), im[i].get<double>());
        rec.counts_outside = j["counts_outside"].get<std::vector<double>>();
        rec.dbl_estimate = json_double(j["dbl_estimate"]);
        rec.dbl_stderr = json_double(j["dbl_stderr"]);
        rec.w1_estimate = json_double(j["w1_estimate"]);
        rec.w1_stderr = json_double(j["w1_stderr"]);
        for (const auto& [k, v] : j["bounds"].items())
            rec.bound_values.emplace_back(k, v.get<double>());
        records.push_back(std::move(rec));
    }
    return records;
}

void write_spectrum_summary(const SpectrumSummary& s, const std::string& path) {
    Json j;
    j["experiment"] = "spectrum";
    j["schema"] = 1;
    j["n"] = s.n;
    j["m"] = s.m;
    j["alpha"] = s.alpha;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["flagged"] = s.flagged;
    j["support_radius"] = s.support_radius;
    j["max_modulus_overall"] = s.max_modulus_overall;
    j["mean_count_outside_unit"] = s.mean_count_outside_unit;
    j["ok"] = s.ok;
    write_file(path, j.dump(1) + "\n");
}

void write_distance_summary(const DistanceSummary& s, const std::string& path) {
    Json j;
    j["experiment"] = "distance";
    j["schema"] = 1;
    j["n"] = s.n;
    j["m"] = s.m;
    j["alpha"] = s.alpha;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["flagged"] = s.flagged;
    j["metric"] = s.metric;
    j["metric_samples"] = s.metric_samples;
    j["subsampled"] = s.subsampled;
    j["quantiles"] = {{"min", s.min}, {"q25", s.q25}, {"median", s.median},
                      {"q75", s.q75}, {"max", s.max}};
    j["delta_m"] = s.delta_m_value;
    j["delta_m_dense_branch"] = s.delta_m_dense_branch;
    j["below_delta_m"] = s.below_delta_m;
    j["r_grid"] = s.r_grid;
    j["concentration_bounds"] = s.bound_values;
    j["exceed_freq"] = s.exceed_freq;
    j["exceed_se"] = s.exceed_se;
    j["domination_ok"] = s.domination_ok;
    j["ok"] = s.ok;
    write_file(path, j.dump(1) + "\n");
}

void write_edge_summary(const EdgeSummary& s, const std::string& path) {
    Json j;
    j["experiment"] = "edge";
    j["schema"] = 1;
    j["n"] = s.n;
    j["m"] = s.m;
    j["alpha"] = s.alpha;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["flagged"] = s.flagged;
    j["reduction_agreement"] = s.reduction_agreement;
    Json rows = Json::array();
    for (const EdgeRadiusRow& r : s.rows) {
        Json row;
        row["radius"] = r.radius;
        row["mc_mean"] = r.mc_mean;
        row["mc_se"] = r.mc_se;
        row["expected_beta"] = r.expected_beta;
        row["expected_quad"] = r.expected_quad;
        row["p_exceed"] = r.p_exceed;
        row["p_exceed_se"] = r.p_exceed_se;
        row["edge_bound"] = std::isnan(r.edge_bound_value) ? Json() : Json(r.edge_bound_value);
        row["edge_bound_vacuous"] = r.edge_bound_vacuous;
        row["count_ok"] = r.count_ok;
        row["bound_ok"] = r.bound_ok;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["ok"] = s.ok;
    write_file(path, j.dump(1) + "\n");
}

void write_bounds_report_json(const std::vector<BoundReport>& reports, const std::string& path) {
    Json root;
    root["schema"] = 1;
    Json arr = Json::array();
    for (const BoundReport& b : reports) {
        Json j;
        j["name"] = b.name;
        j["n"] = b.n;
        j["m"] = b.m;
        j["parameter"] = b.parameter;
        j["value"] = std::isfinite(b.value) ? Json(b.value) : Json();
        j["log_value"] = std::isfinite(b.log_value) ? Json(b.log_value) : Json();
        j["vacuous"] = b.vacuous;
        j["overflowed"] = b.overflowed;
        Json comp = Json::object();
        for (const auto& [k, v] : b.components) comp[k] = v;
        j["components"] = std::move(comp);
        arr.push_back(std::move(j));
    }
    root["bounds"] = std::move(arr);
    write_file(path, root.dump(1) + "\n");
}

void write_bounds_report_csv(const std::vector<BoundReport>& reports, const std::string& path) {
    std::ostringstream out;
    out << "name,n,m,parameter,value,log_value,vacuous,overflowed\n";
    for (const BoundReport& b : reports) {
        out << b.name << ',' << b.n << ',' << b.m << ',' << fmt(b.parameter) << ','
            << fmt(b.value) << ',' << fmt(b.log_value) << ',' << (b.vacuous ? 1 : 0) << ','
            << (b.overflowed ? 1 : 0) << '\n';
    }
    write_file(path, out.str());
}

namespace {

std::string svg_path(const std::string& out_dir, const char* stem, double ratio) {
    std::filesystem::create_directories(out_dir);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_alpha_%.2f.svg", stem, ratio);
    return (std::filesystem::path(out_dir) / buf).string();
}

}  // namespace

std::string write_eigenvalue_scatter_svg(const std::string& out_dir, double ratio,
                                         const std::vector<Complex>& eigenvalues,
                                         const TruncationEnsemble& ensemble) {
    const double extent = ensemble.scale() * 1.08;
    const int size = 480;
    const double half = size / 2.0;
    auto px = [&](double x) { return half + x / extent * half; };
    auto py = [&](double y) { return half - y / extent * half; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    out << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    out << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << half / extent
        << "\" fill=\"none\" stroke=\"#2060c0\" stroke-width=\"1\"/>\n";
    out << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\""
        << ensemble.scale() / extent * half
        << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    for (const Complex& z : eigenvalues) {
        out << "<circle class=\"pt\" cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag())
            << "\" r=\"1.8\" fill=\"#c03020\"/>\n";
    }
    out << "</svg>\n";
    const std::string path = svg_path(out_dir, "eigenvalues", ratio);
    write_file(path, out.str());
    return path;
}

std::string write_radial_histogram_svg(const std::string& out_dir, double ratio,
                                       const std::vector<Complex>& eigenvalues,
                                       const TruncationEnsemble& ensemble) {
    const int width = 520, height = 340, margin = 30;
    const double rmax = ensemble.scale();
    const int bins = 32;
    std::vector<double> counts(bins, 0.0);
    for (const Complex& z : eigenvalues) {
        int b = static_cast<int>(std::abs(z) / rmax * bins);
        b = std::clamp(b, 0, bins - 1);
        counts[static_cast<std::size_t>(b)] += 1.0;
    }
    const double bin_width = rmax / bins;
    // normalize to a density in r
    double peak = 0.0;
    for (double& c : counts) {
        c /= static_cast<double>(eigenvalues.size()) * bin_width;
        peak = std::max(peak, c);
    }
    const LimitMeasure limit(ensemble.alpha());
    std::vector<double> curve;
    const int curve_points = 240;
    for (int i = 0; i <= curve_points; ++i) {
        const double r = rmax * i / curve_points;
        const double v = (r < 1.0) ? limit.radial_pdf(r) : 0.0;
        curve.push_back(v);
        peak = std::max(peak, v);
    }
    if (peak <= 0.0) peak = 1.0;

    auto px = [&](double r) { return margin + r / rmax * (width - 2 * margin); };
    auto py = [&](double v) { return height - margin - v / peak * (height - 2 * margin); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    for (int b = 0; b < bins; ++b) {
        const double r0 = b * bin_width;
        const double v = counts[static_cast<std::size_t>(b)];
        out << "<rect class=\"bar\" x=\"" << px(r0) << "\" y=\"" << py(v) << "\" width=\""
            << (px(r0 + bin_width) - px(r0)) << "\" height=\"" << (py(0.0) - py(v))
            << "\" fill=\"#88aadd\" stroke=\"#5577aa\" stroke-width=\"0.5\"/>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"#c03020\" stroke-width=\"1.5\" points=\"";
    for (int i = 0; i <= curve_points; ++i) {
        const double r = rmax * i / curve_points;
        out << px(r) << ',' << py(curve[static_cast<std::size_t>(i)]) << ' ';
    }
    out << "\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << py(0.0) << "\" x2=\"" << (width - margin)
        << "\" y2=\"" << py(0.0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "</svg>\n";
    const std::string path = svg_path(out_dir, "radial", ratio);
    write_file(path, out.str());
    return path;
}

namespace {

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) out.push_back(std::stod(token));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value) {
    if (key == "kind" || key == "experiment") config.kind = value;
    else if (key == "n") config.n = std::stoi(value);
    else if (key == "m") config.m = std::stoi(value);
    else if (key == "trials") config.trials = std::stoi(value);
    else if (key == "seed") config.seed = std::stoull(value);
    else if (key == "workers") config.workers = std::stoi(value);
    else if (key == "metric") {
        if (value == "w1") config.metric = Metric::w1;
        else if (value == "dbl") config.metric = Metric::dbl;
        else throw std::invalid_argument("config: metric must be w1 or dbl");
    }
    else if (key == "metric-samples" || key == "metric_samples")
        config.metric_samples = std::stoull(value);
    else if (key == "metric-batches" || key == "metric_batches")
        config.metric_batches = std::stoi(value);
    else if (key == "radius-grid" || key == "radius_grid")
        config.radius_grid = parse_double_list(value);
    else if (key == "r-grid" || key == "r_grid") config.r_grid = parse_double_list(value);
    else if (key == "eps-grid" || key == "eps_grid") config.eps_grid = parse_double_list(value);
    else if (key == "figure-ratios" || key == "figure_ratios")
        config.figure_ratios = parse_double_list(value);
    else if (key == "out") config.out_dir = value;
    else if (key == "format") config.format = value;
    else if (key == "lp-cap" || key == "lp_cap") config.lp_cap = std::stoull(value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    ExperimentConfig config;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = Json::parse(text);
        for (const auto& [key, value] : j.items()) {
            if (value.is_string()) apply_config_entry(config, key, value.get<std::string>());
            else if (value.is_array()) {
                std::string joined;
                for (const auto& item : value) {
                    if (!joined.empty()) joined += ',';
                    joined += fmt(item.get<double>());
                }
                apply_config_entry(config, key, joined);
            } else apply_config_entry(config, key, value.dump());
        }
        return config;
    }

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got '" + stripped + "'");
        apply_config_entry(config, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return config;
}

}  // namespace trunclab
