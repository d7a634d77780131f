#include "schurpress/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "schurpress/estimation.hpp"
#include "schurpress/report.hpp"
#include "schurpress/schur.hpp"

namespace schurpress {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr std::uint64_t kDefaultSeed = 7;

double parse_one_double(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("invalid number: '" + text + "'");
    }
    return v;
}

struct CommonOptions {
    std::string theta_spec;
    double phase_deg = 0.0;
    std::string axis_name = "Z";
    std::optional<double> delta_deg;
    std::optional<double> epsilon_deg;
    int runs = 500;
    int trials = 250;
    long long samples = 0;
    double leakage_p = 0.015;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "";
    bool check = false;
};

OutputFormat resolve_format(const std::string& format, const std::string& fallback) {
    const std::string& f = format.empty() ? fallback : format;
    if (f == "csv") {
        return OutputFormat::csv;
    }
    if (f == "json") {
        return OutputFormat::json;
    }
    throw std::invalid_argument("format must be csv or json");
}

std::string format_extension(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

SpinAxis resolve_axis(const CommonOptions& opt) {
    if (opt.delta_deg || opt.epsilon_deg) {
        if (!opt.delta_deg || !opt.epsilon_deg) {
            throw std::invalid_argument("--delta and --epsilon must be given together");
        }
        return {*opt.delta_deg * kDegToRad, *opt.epsilon_deg * kDegToRad};
    }
    if (opt.axis_name == "X" || opt.axis_name == "x") {
        return SpinAxis::x();
    }
    if (opt.axis_name == "Y" || opt.axis_name == "y") {
        return SpinAxis::y();
    }
    if (opt.axis_name == "Z" || opt.axis_name == "z") {
        return SpinAxis::z();
    }
    throw std::invalid_argument("axis must be X, Y or Z (or use --delta/--epsilon)");
}

std::string axis_label(const CommonOptions& opt) {
    if (opt.delta_deg) {
        return "delta=" + format_double(*opt.delta_deg) + ";epsilon=" + format_double(*opt.epsilon_deg);
    }
    std::string label = opt.axis_name;
    for (auto& c : label) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return label;
}

int finish(const Table& data, OutputFormat format, const std::string& out_path,
           const std::vector<ReportRow>& checks, bool check_requested,
           const std::string& summary) {
    write_table_atomic(data, format, out_path);
    std::size_t passed = 0;
    if (check_requested) {
        emit_report(checks, format, report_path_for(out_path));
        for (const auto& row : checks) {
            if (row.pass) {
                ++passed;
            }
        }
    }
    std::cout << summary << " -> " << out_path;
    if (check_requested) {
        std::cout << " (checks: " << passed << "/" << checks.size()
                  << " passed, report " << report_path_for(out_path) << ")";
    }
    std::cout << "\n";
    if (check_requested && passed != checks.size()) {
        for (const auto& row : checks) {
            if (!row.pass) {
                std::cerr << "check failed: " << row.experiment << " [" << row.params
                          << "] analytic=" << format_double(row.analytic)
                          << " sampled=" << format_double(row.sampled)
                          << " band=" << format_double(row.band) << "\n";
            }
        }
        return 1;
    }
    return 0;
}

/// Boolean condition encoded in the pass-iff-|sampled-analytic|<=band form.
ReportRow indicator_row(std::string experiment, std::string params, bool condition) {
    return {std::move(experiment), std::move(params), 1.0, condition ? 1.0 : 0.0, 0.5, condition};
}

ReportRow closeness_row(std::string experiment, std::string params, double analytic,
                        double sampled, double band) {
    const bool pass = std::abs(sampled - analytic) <= band;
    return {std::move(experiment), std::move(params), analytic, sampled, band, pass};
}

int cmd_compress(const CommonOptions& opt) {
    const double theta = parse_one_double(opt.theta_spec) * kDegToRad;
    const ThetaState state{theta, opt.phase_deg * kDegToRad};
    const StateVector compressed = compress3(state.to_qubit_state());

    const OutputFormat format = resolve_format(opt.format, "json");
    const std::string out =
        opt.out.empty() ? "compress." + format_extension(format) : opt.out;

    Table table;
    table.header = {"basis", "amplitude_re", "amplitude_im", "probability"};
    const char* kets[4] = {"00", "01", "10", "11"};
    for (std::size_t k = 0; k < 4; ++k) {
        const Complex a = compressed.amplitude(k);
        table.add_row({std::string(kets[k]), a.real(), a.imag(), std::norm(a)});
    }

    std::vector<ReportRow> checks;
    if (opt.check) {
        const std::string params = "theta_deg=" + opt.theta_spec;
        checks.push_back(closeness_row("compress_norm", params, 1.0, compressed.norm(), 1e-12));
        const Complex a = state.to_qubit_state().alpha();
        const Complex b = state.to_qubit_state().beta();
        const double r3 = std::sqrt(3.0);
        const Complex expected[4] = {a * a * a, r3 * a * a * b, r3 * a * b * b, b * b * b};
        double max_dev = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            max_dev = std::max(max_dev, std::abs(compressed.amplitude(k) - expected[k]));
        }
        checks.push_back(closeness_row("compress_amplitudes", params, 0.0, max_dev, 1e-12));
    }
    return finish(table, format, out, checks, opt.check, "compress: 4 amplitudes");
}

int cmd_distribution(const CommonOptions& opt) {
    const double theta_deg = parse_one_double(opt.theta_spec);
    const ThetaState state{theta_deg * kDegToRad, opt.phase_deg * kDegToRad};
    const SpinAxis axis = resolve_axis(opt);
    const long long samples = opt.samples > 0 ? opt.samples : 100000;

    const auto probs = outcome_distribution(compress3(state.to_qubit_state()), axis);
    const ShotHistogram hist =
        sample_shot_histogram(state, axis, TrialMode::compressed, samples, opt.seed);

    const OutputFormat format = resolve_format(opt.format, "csv");
    const std::string out =
        opt.out.empty() ? "distribution." + format_extension(format) : opt.out;

    Table table;
    table.header = {"theta_deg", "phase_deg", "axis", "m", "estimate", "probability", "empirical"};
    const auto ms = spin32_basis_map();
    std::vector<ReportRow> checks;
    const std::string params = "theta_deg=" + opt.theta_spec + ";axis=" + axis_label(opt) +
                               ";samples=" + std::to_string(samples);
    for (std::size_t k = 0; k < 4; ++k) {
        const double empirical =
            static_cast<double>(hist.counts[k]) / static_cast<double>(hist.total);
        table.add_row({theta_deg, opt.phase_deg, axis_label(opt), ms[k], ms[k] / 3.0, probs[k],
                       empirical});
        if (opt.check) {
            const double sigma =
                std::sqrt(probs[k] * (1.0 - probs[k]) / static_cast<double>(samples));
            checks.push_back(closeness_row("distribution_m=" + format_double(ms[k]), params,
                                           probs[k], empirical, 4.0 * sigma));
        }
    }
    return finish(table, format, out, checks, opt.check, "distribution: 4 outcomes");
}

int cmd_trials(const CommonOptions& opt) {
    const double theta = parse_one_double(opt.theta_spec) * kDegToRad;
    const ThetaState state{theta, opt.phase_deg * kDegToRad};
    const SpinAxis axis = resolve_axis(opt);

    const TrialEnsembleResult res = run_trial_ensemble(state, axis, opt.runs, opt.trials,
                                                       TrialMode::compressed, opt.seed);

    const OutputFormat format = resolve_format(opt.format, "csv");
    const std::string out = opt.out.empty() ? "trials." + format_extension(format) : opt.out;

    Table table;
    table.header = {"trial", "mean"};
    for (std::size_t t = 0; t < res.trial_means.size(); ++t) {
        table.add_row({static_cast<long long>(t), res.trial_means[t]});
    }

    std::vector<ReportRow> checks;
    if (opt.check) {
        const double v1 = single_copy_variance(state, axis);
        const double expected = v1 / (3.0 * opt.runs);
        const double rejected = v1 / (2.0 * opt.runs);
        const int dof = opt.trials - 1;
        const Band accept = chi_squared_variance_band(expected, dof, 0.99);
        const Band reject = chi_squared_variance_band(rejected, dof, 0.99);
        const std::string params = "theta_deg=" + opt.theta_spec + ";axis=" + axis_label(opt) +
                                   ";M=" + std::to_string(opt.runs) +
                                   ";trials=" + std::to_string(opt.trials);
        checks.push_back(closeness_row("trial_variance_matches_v1_over_3M", params,
                                       0.5 * (accept.lo + accept.hi), res.stats.variance,
                                       0.5 * (accept.hi - accept.lo)));
        const bool outside = res.stats.variance < reject.lo || res.stats.variance > reject.hi;
        checks.push_back(indicator_row("trial_variance_rejects_v1_over_2M", params, outside));
    }
    std::ostringstream summary;
    summary << "trials: " << opt.trials << " trials of M=" << opt.runs
            << ", mean=" << format_double(res.stats.mean)
            << ", variance=" << format_double(res.stats.variance);
    return finish(table, format, out, checks, opt.check, summary.str());
}

int cmd_sweep(const CommonOptions& opt) {
    const std::vector<double> thetas_deg = parse_theta_spec(opt.theta_spec);
    std::vector<double> thetas;
    thetas.reserve(thetas_deg.size());
    for (double t : thetas_deg) {
        thetas.push_back(t * kDegToRad);
    }
    const SpinAxis axis = resolve_axis(opt);
    const long long samples = opt.samples > 0 ? opt.samples : 1000000;

    const auto rows = variance_sweep(thetas, axis, samples, opt.seed);

    const OutputFormat format = resolve_format(opt.format, "csv");
    const std::string out = opt.out.empty() ? "sweep." + format_extension(format) : opt.out;

    Table table;
    table.header = {"theta_deg",          "axis",
                    "v1",                 "analytic_compressed",
                    "sampled_compressed", "sampled_direct2",
                    "ratio_direct2_over_compressed"};
    std::vector<ReportRow> checks;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const double ratio =
            row.sampled_compressed > 0.0 ? row.sampled_direct2 / row.sampled_compressed : 0.0;
        table.add_row({thetas_deg[i], axis_label(opt), row.v1, row.analytic_compressed,
                       row.sampled_compressed, row.sampled_direct2, ratio});
        if (opt.check) {
            const std::string params = "theta_deg=" + format_double(thetas_deg[i]) +
                                       ";axis=" + axis_label(opt) +
                                       ";samples=" + std::to_string(samples);
            // 4-sigma band from the asymptotic variance of the sample variance.
            const ThetaState state{thetas[i], 0.0};
            const auto probs = outcome_distribution(compress3(state.to_qubit_state()), axis);
            const auto moments = estimate_moments(probs);
            const auto ms = spin32_basis_map();
            double mu4 = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const double d = ms[k] / 3.0 - moments.mean;
                mu4 += d * d * d * d * probs[k];
            }
            const double var_of_var =
                (mu4 - moments.variance * moments.variance) / static_cast<double>(samples);
            checks.push_back(closeness_row("sweep_sampled_variance", params,
                                           row.analytic_compressed, row.sampled_compressed,
                                           4.0 * std::sqrt(std::max(0.0, var_of_var))));
            if (row.v1 > 1e-9) {
                checks.push_back(
                    closeness_row("sweep_direct2_ratio", params, 1.5, ratio, 0.03));
            } else {
                checks.push_back(closeness_row(
                    "sweep_degenerate_point", params, 0.0,
                    std::max(row.sampled_compressed, row.sampled_direct2), 1e-12));
            }
        }
    }
    std::ostringstream summary;
    summary << "sweep: " << rows.size() << " theta points, axis " << axis_label(opt);
    return finish(table, format, out, checks, opt.check, summary.str());
}

int cmd_average(const CommonOptions& opt) {
    const std::vector<double> thetas_deg = parse_theta_spec(opt.theta_spec);

    const OutputFormat format = resolve_format(opt.format, "csv");
    const std::string out = opt.out.empty() ? "average." + format_extension(format) : opt.out;

    Table table;
    table.header = {"theta_deg", "phase_deg", "vx", "vy", "vz", "mean_xyz", "quadrature",
                    "compressed_average"};
    std::vector<ReportRow> checks;
    for (double theta_deg : thetas_deg) {
        const ThetaState state{theta_deg * kDegToRad, opt.phase_deg * kDegToRad};
        const double vx = single_copy_variance(state, SpinAxis::x());
        const double vy = single_copy_variance(state, SpinAxis::y());
        const double vz = single_copy_variance(state, SpinAxis::z());
        const double mean = average_variance(state);
        const double quad = average_variance_quadrature(state);
        table.add_row({theta_deg, opt.phase_deg, vx, vy, vz, mean, quad, mean / 3.0});
        if (opt.check) {
            const std::string params = "theta_deg=" + format_double(theta_deg) +
                                       ";phase_deg=" + format_double(opt.phase_deg);
            checks.push_back(closeness_row("average_quadrature_identity", params, mean, quad, 1e-8));
            checks.push_back(
                closeness_row("average_is_one_sixth", params, 1.0 / 6.0, mean, 1e-12));
        }
    }
    std::ostringstream summary;
    summary << "average: " << thetas_deg.size() << " states";
    return finish(table, format, out, checks, opt.check, summary.str());
}

int cmd_mle(const CommonOptions& opt) {
    const std::vector<double> thetas_deg = parse_theta_spec(opt.theta_spec);
    std::vector<double> thetas;
    thetas.reserve(thetas_deg.size());
    for (double t : thetas_deg) {
        thetas.push_back(t * kDegToRad);
    }
    const long long samples = opt.samples > 0 ? opt.samples : 1000000;

    const MleSweepResult res = mle_mse_sweep(thetas, samples, opt.seed);

    const OutputFormat format = resolve_format(opt.format, "csv");
    const std::string out = opt.out.empty() ? "mle." + format_extension(format) : opt.out;

    Table table;
    table.header = {"theta_deg", "z_true", "mse", "v1_over_3", "v1_over_2", "fitted_k"};
    double mean_mse = 0.0;
    double mean_v1_3 = 0.0;
    double mean_v1_2 = 0.0;
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        const double v1 = single_copy_variance(ThetaState{thetas[i], 0.0}, SpinAxis::z());
        table.add_row({thetas_deg[i], res.rows[i].z_true, res.rows[i].mse, v1 / 3.0, v1 / 2.0,
                       res.fitted_k});
        mean_mse += res.rows[i].mse;
        mean_v1_3 += v1 / 3.0;
        mean_v1_2 += v1 / 2.0;
    }
    const double n = static_cast<double>(res.rows.size());
    mean_mse /= n;
    mean_v1_3 /= n;
    mean_v1_2 /= n;

    std::vector<ReportRow> checks;
    if (opt.check) {
        const std::string params =
            "thetas=" + opt.theta_spec + ";samples=" + std::to_string(samples);
        checks.push_back(indicator_row("mle_k_between_2_and_3", params,
                                       res.fitted_k > 2.0 && res.fitted_k < 3.0));
        checks.push_back(indicator_row("mle_mean_between_3q_and_2q", params,
                                       mean_mse > mean_v1_3 && mean_mse < mean_v1_2));
        for (std::size_t i = 0; i < res.rows.size(); ++i) {
            if (std::abs(res.rows[i].z_true - 0.5) < 1e-12) {
                checks.push_back(
                    indicator_row("mle_mse_positive_at_theta0", params, res.rows[i].mse > 0.0));
            }
        }
    }
    std::ostringstream summary;
    summary << "mle: " << res.rows.size() << " theta points, " << samples
            << " games each, fitted K=" << format_double(res.fitted_k);
    return finish(table, format, out, checks, opt.check, summary.str());
}

int cmd_noise(const CommonOptions& opt) {
    if (!(opt.leakage_p >= 0.0 && opt.leakage_p <= 1.0)) {
        throw std::invalid_argument("--leakage-p must lie in [0, 1]");
    }
    const std::vector<double> thetas_deg = parse_theta_spec(opt.theta_spec);

    const OutputFormat format = resolve_format(opt.format, "csv");
    const std::string out = opt.out.empty() ? "noise." + format_extension(format) : opt.out;

    Table table;
    table.header = {"theta_deg", "leakage_p", "ideal_variance", "leaky_variance", "deviation"};
    double max_dev = -1.0;
    double argmax_theta = 0.0;
    for (double theta_deg : thetas_deg) {
        const ThetaState state{theta_deg * kDegToRad, 0.0};
        const StateVector compressed = compress3(state.to_qubit_state());
        const auto ideal = estimate_moments(outcome_distribution(compressed, SpinAxis::x()));
        const auto leaky = estimate_moments(leaky_x_distribution(compressed, opt.leakage_p));
        const double dev = std::abs(leaky.variance - ideal.variance);
        table.add_row({theta_deg, opt.leakage_p, ideal.variance, leaky.variance, dev});

        if (dev > max_dev) {
            max_dev = dev;
            argmax_theta = theta_deg;
        }
    }

    std::vector<ReportRow> checks;
    if (opt.check) {
        const std::string params =
            "thetas=" + opt.theta_spec + ";p=" + format_double(opt.leakage_p);
        const double step =
            thetas_deg.size() > 1 ? std::abs(thetas_deg[1] - thetas_deg[0]) : 0.0;
        const ThetaState bright{22.5 * kDegToRad, 0.0};
        const StateVector compressed = compress3(bright.to_qubit_state());
        const auto ideal = estimate_moments(outcome_distribution(compressed, SpinAxis::x()));
        const auto leaky = estimate_moments(leaky_x_distribution(compressed, opt.leakage_p));
        checks.push_back(closeness_row("noise_ideal_variance_zero_at_22.5", params, 0.0,
                                       ideal.variance, 1e-12));
        checks.push_back(indicator_row("noise_leaky_variance_positive_at_22.5", params,
                                       leaky.variance > 0.0));
        checks.push_back(closeness_row("noise_max_deviation_near_22.5", params, 22.5,
                                       argmax_theta, step + 1e-9));
    }
    std::ostringstream summary;
    summary << "noise: " << thetas_deg.size() << " theta points, p=" << opt.leakage_p
            << ", max deviation at theta=" << format_double(argmax_theta);
    return finish(table, format, out, checks, opt.check, summary.str());
}

}  // namespace

std::vector<double> parse_theta_spec(const std::string& spec) {
    if (spec.empty()) {
        throw std::invalid_argument("empty theta specification");
    }
    std::vector<double> values;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ':')) {
            parts.push_back(item);
        }
        if (parts.size() != 3) {
            throw std::invalid_argument("range must be start:stop:step");
        }
        const double start = parse_one_double(parts[0]);
        const double stop = parse_one_double(parts[1]);
        const double step = parse_one_double(parts[2]);
        if (step <= 0.0 || stop < start) {
            throw std::invalid_argument("range needs step > 0 and stop >= start");
        }
        for (int i = 0;; ++i) {
            const double v = start + i * step;
            if (v > stop + 1e-9) {
                break;
            }
            values.push_back(v);
        }
        return values;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(parse_one_double(item));
    }
    if (values.empty()) {
        throw std::invalid_argument("empty theta specification");
    }
    return values;
}

std::string report_path_for(const std::string& out_path) {
    const std::filesystem::path p(out_path);
    const std::string ext = p.extension().string();
    std::filesystem::path stem = p;
    stem.replace_extension();
    return stem.string() + "_report" + ext;
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Symmetric-subspace compression of identical-qubit ensembles:\n"
                 "simulation experiments with CSV/JSON data export."};
    app.require_subcommand(1);

    CommonOptions opt;
    auto add_common = [&](CLI::App* sub, bool needs_theta) {
        auto* theta = sub->add_option("--theta-deg", opt.theta_spec,
                                      "theta in degrees: value, comma list, or start:stop:step");
        if (needs_theta) {
            theta->required();
        }
        sub->add_option("--phase-deg", opt.phase_deg, "relative phase in degrees (default 0)");
        sub->add_option("--axis", opt.axis_name, "measurement axis X, Y or Z (default Z)");
        sub->add_option("--delta", opt.delta_deg, "polar angle of the axis, degrees");
        sub->add_option("--epsilon", opt.epsilon_deg, "azimuthal angle of the axis, degrees");
        sub->add_option("-M,--runs", opt.runs, "single-shot runs per trial (default 500)");
        sub->add_option("--trials", opt.trials, "number of trials (default 250)");
        sub->add_option("--samples", opt.samples, "Monte-Carlo sample count");
        sub->add_option("--leakage-p", opt.leakage_p, "dark-port leakage probability");
        sub->add_option("--seed", opt.seed, "root RNG seed (default 7; all runs are seeded)");
        sub->add_option("--out", opt.out, "output path (default <subcommand>.<format>)");
        sub->add_option("--format", opt.format, "csv or json");
        sub->add_flag("--check", opt.check,
                      "verify analytic vs sampled values; write a _report file; exit 1 on failure");
    };

    auto* compress = app.add_subcommand(
        "compress", "Compressed-pair amplitudes of one input state.\n"
                    "Columns: basis,amplitude_re,amplitude_im,probability");
    add_common(compress, true);
    auto* distribution = app.add_subcommand(
        "distribution", "Analytic and sampled collective-outcome distribution.\n"
                        "Columns: theta_deg,phase_deg,axis,m,estimate,probability,empirical");
    add_common(distribution, true);
    auto* trials = app.add_subcommand(
        "trials", "Trial-mean histogram for M-run trials.\nColumns: trial,mean");
    add_common(trials, true);
    auto* sweep = app.add_subcommand(
        "sweep", "Single-shot variance versus theta with the two-copy baseline.\n"
                 "Columns: theta_deg,axis,v1,analytic_compressed,sampled_compressed,"
                 "sampled_direct2,ratio_direct2_over_compressed");
    add_common(sweep, false);
    auto* average = app.add_subcommand(
        "average", "Axis-averaged variance with sphere-quadrature cross-check.\n"
                   "Columns: theta_deg,phase_deg,vx,vy,vz,mean_xyz,quadrature,compressed_average");
    add_common(average, false);
    auto* mle = app.add_subcommand(
        "mle", "Store-two-measure-one maximum-likelihood baseline.\n"
               "Columns: theta_deg,z_true,mse,v1_over_3,v1_over_2,fitted_k");
    add_common(mle, false);
    auto* noise = app.add_subcommand(
        "noise", "Dark-port leakage model for the X measurement.\n"
                 "Columns: theta_deg,leakage_p,ideal_variance,leaky_variance,deviation");
    add_common(noise, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (opt.runs < 1 || opt.trials < 1 || opt.samples < 0) {
            throw std::invalid_argument("counts must be positive");
        }
        if (opt.theta_spec.empty()) {
            opt.theta_spec = mle->parsed() ? "0:22.5:2.8125" : "0:22.5:2.25";
        }
        if (compress->parsed()) {
            return cmd_compress(opt);
        }
        if (distribution->parsed()) {
            return cmd_distribution(opt);
        }
        if (trials->parsed()) {
            return cmd_trials(opt);
        }
        if (sweep->parsed()) {
            return cmd_sweep(opt);
        }
        if (average->parsed()) {
            return cmd_average(opt);
        }
        if (mle->parsed()) {
            return cmd_mle(opt);
        }
        if (noise->parsed()) {
            return cmd_noise(opt);
        }
        std::cerr << "no subcommand given\n" << app.help() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace schurpress
