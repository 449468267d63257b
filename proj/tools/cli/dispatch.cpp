// SPDX-License-Identifier: Apache-2.0
//
// thzprop: indoor millimeter-wave and sub-terahertz propagation models
// Copyright (C) 2026 The thzprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "cli/dispatch.hpp"

#include "cli/json_output.hpp"

#include <thzprop/thzprop.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace thzprop::cli
{
namespace
{

struct CommonOptions
{
    std::string output;
    std::string format = "json";
};

struct ScatterOptions
{
    double eps_r = 6.4;
    double incident_angle_deg = 0.0;
    double s = 0.4;
    double lambda = 0.9;
    int alpha_r = 4;
    int alpha_i = 4;
    double hpbw_deg = 8.0;
    double tx_distance_m = 1.5;
    double rx_distance_m = 1.5;
    std::vector<double> angles;
};

void add_scatter_options(CLI::App *sub, ScatterOptions &o, bool require_theta)
{
    auto *theta = sub->add_option("--theta-i", o.incident_angle_deg, "Incident angle from the normal (deg)");
    if (require_theta)
        theta->required();
    sub->add_option("--eps", o.eps_r, "Relative permittivity")->capture_default_str();
    sub->add_option("--s", o.s, "Scattering coefficient S")->capture_default_str();
    sub->add_option("--lambda", o.lambda, "Forward lobe weight")->capture_default_str();
    sub->add_option("--alpha-r", o.alpha_r, "Forward lobe sharpness")->capture_default_str();
    sub->add_option("--alpha-i", o.alpha_i, "Backward lobe sharpness")->capture_default_str();
    sub->add_option("--hpbw", o.hpbw_deg, "Antenna half-power beamwidth (deg)")->capture_default_str();
    sub->add_option("--tx-distance", o.tx_distance_m, "TX to surface distance (m)")->capture_default_str();
    sub->add_option("--rx-distance", o.rx_distance_m, "Surface to RX distance (m)")->capture_default_str();
    sub->add_option("--angles", o.angles, "Observation arc angles (deg); default 10..170 step 10");
}

ScatterPattern run_prediction(const ScatterOptions &o)
{
    ScatterGeometry geom;
    geom.incident_angle_deg = o.incident_angle_deg;
    geom.observation_angles_deg = o.angles.empty() ? ScatterGeometry::measured_arc() : o.angles;
    geom.tx_distance_m = o.tx_distance_m;
    geom.rx_distance_m = o.rx_distance_m;
    DsParameters params{o.s, o.lambda, o.alpha_r, o.alpha_i};
    return predict_pattern(geom, Permittivity(o.eps_r), params, o.hpbw_deg);
}

/// Keeps the samples at `freq` when given; otherwise requires a single
/// frequency across the set and returns it.
template <class Sample>
std::pair<double, std::vector<Sample>> select_frequency(std::vector<Sample> samples, std::optional<double> freq)
{
    if (freq)
    {
        std::erase_if(samples, [&](const Sample &s) { return !same_frequency(s.frequency_hz, *freq); });
        return {*freq, std::move(samples)};
    }
    if (samples.empty())
        return {0.0, std::move(samples)};
    const double f = samples.front().frequency_hz;
    for (const auto &s : samples)
        if (!same_frequency(s.frequency_hz, f))
            throw Error(Errc::mixed_frequencies, "input spans several frequencies; pass --freq");
    return {f, std::move(samples)};
}

std::vector<ReflectionSample> reflection_input(const std::string &input, std::optional<double> &freq)
{
    if (!input.empty())
    {
        auto [f, samples] = select_frequency(load_reflection_csv(input), freq);
        freq = f;
        return samples;
    }
    if (!freq)
        throw Error(Errc::invalid_argument, "pass --input or --freq to use the embedded reflection table");
    return paper_dataset().reflection_at(*freq);
}

Json sample_json(const PathLossSample &s)
{
    return Json{{"freq_hz", hz(s.frequency_hz)},
                {"tx_id", s.tx_id},
                {"rx_id", s.rx_id},
                {"distance_m", s.distance_m},
                {"environment", to_string(s.environment)},
                {"tx_az_deg", s.tx_az_deg},
                {"tx_el_deg", s.tx_el_deg},
                {"rx_az_deg", s.rx_az_deg},
                {"rx_el_deg", s.rx_el_deg},
                {"tx_pol", to_string(s.tx_pol)},
                {"rx_pol", to_string(s.rx_pol)},
                {"path_loss_db", s.path_loss_db}};
}

Json ci_json(const CiModel &m, CiEnvironment env)
{
    return Json{{"freq_hz", hz(m.frequency_hz)},
                {"env", to_string(env)},
                {"ple", m.ple},
                {"sigma_db", m.sigma_db},
                {"n_samples", m.sample_count}};
}

Json paper_tables_json()
{
    const auto &d = paper_dataset();
    Json out = Json::object();

    Json bands = Json::array();
    for (const auto &b : d.bands)
    {
        Json antennas = Json::array();
        for (const auto &a : b.antennas)
            antennas.push_back({{"hpbw_deg", a.hpbw_deg}, {"gain_dbi", a.gain_dbi}, {"xpd_db", a.xpd_db}});
        bands.push_back({{"freq_hz", hz(b.band.center_frequency_hz)},
                         {"label", b.band.label},
                         {"rf_bandwidth_hz", hz(b.rf_bandwidth_hz)},
                         {"antennas", antennas}});
    }
    out["sounder"] = bands;

    Json refl = Json::array();
    for (const auto &r : d.reflection)
        refl.push_back({{"freq_hz", hz(r.frequency_hz)},
                        {"incident_angle_deg", r.incident_angle_deg},
                        {"reflection_loss_db", r.reflection_loss_db}});
    out["reflection_loss"] = refl;

    const auto partition_table = [&](std::string_view material) {
        Json rows = Json::array();
        for (const auto &p : d.partition)
            if (p.material_name == material)
                rows.push_back({{"freq_hz", hz(p.frequency_hz)},
                                {"tx_pol", to_string(p.tx_pol)},
                                {"rx_pol", to_string(p.rx_pol)},
                                {"mean_db", p.mean_loss_db},
                                {"std_db", p.std_db}});
        return rows;
    };
    out["partition_clear_glass"] = partition_table(clear_glass);
    out["partition_drywall"] = partition_table(drywall);

    Json ci = Json::array();
    for (const auto &c : d.ci_fits)
        ci.push_back({{"freq_hz", hz(c.frequency_hz)},
                      {"env", to_string(c.environment)},
                      {"ple", c.ple},
                      {"sigma_db", c.sigma_db}});
    out["directional_ci"] = ci;
    return out;
}

std::string pattern_csv(const ScatterPattern &p)
{
    std::string text(pattern_csv_header);
    text += '\n';
    for (const auto &pt : p.points)
        text += format_fixed(pt.observation_angle_deg) + "," + format_fixed(pt.relative_power_db) + "\n";
    return text;
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Indoor mmWave / sub-THz material interaction and path-loss models", "thzprop"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    CommonOptions common;
    app.add_option("--output", common.output, "Write the payload to this path instead of stdout");
    app.add_option("--format", common.format, "Payload format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::vector<std::pair<CLI::App *, std::function<std::string()>>> handlers;
    const auto json_only = [&](const char *name) {
        if (common.format != "json")
            throw Error(Errc::invalid_argument, std::string(name) + " only emits JSON");
    };

    // fresnel
    double eps_r = 0.0, angle_deg = 0.0;
    auto *fresnel = app.add_subcommand("fresnel", "Fresnel perpendicular reflection coefficient and loss");
    fresnel->add_option("--eps", eps_r, "Relative permittivity")->required();
    fresnel->add_option("--angle", angle_deg, "Incident angle from the normal (deg)")->required();
    handlers.emplace_back(fresnel, [&] {
        json_only("fresnel");
        const IncidenceGeometry theta(angle_deg);
        const Permittivity eps(eps_r);
        const auto gamma = fresnel_gamma_perp(theta, eps);
        return render_json(Json{{"eps_r", eps_r},
                                {"incident_angle_deg", angle_deg},
                                {"gamma", gamma.value},
                                {"gamma_magnitude", gamma.magnitude()},
                                {"loss_db", reflection_loss_db(theta, eps)}});
    });

    // estimate-eps / fit-linear
    std::string input;
    std::optional<double> freq;
    auto *estimate = app.add_subcommand("estimate-eps", "MMSE permittivity from reflection-loss samples");
    estimate->add_option("--input", input, "Reflection CSV (default: embedded drywall table)");
    estimate->add_option("--freq", freq, "Carrier frequency (Hz)");
    handlers.emplace_back(estimate, [&] {
        json_only("estimate-eps");
        const auto samples = reflection_input(input, freq);
        const auto est = estimate_permittivity_mmse(samples);
        return render_json(Json{{"freq_hz", hz(*freq)},
                                {"eps_r", est.eps.value()},
                                {"mse", est.mse},
                                {"samples_used", est.samples_used}});
    });

    auto *linear = app.add_subcommand("fit-linear", "Linear fit of |Gamma| against incident angle");
    linear->add_option("--input", input, "Reflection CSV (default: embedded drywall table)");
    linear->add_option("--freq", freq, "Carrier frequency (Hz)");
    handlers.emplace_back(linear, [&] {
        json_only("fit-linear");
        const auto samples = reflection_input(input, freq);
        const auto fit = fit_linear_reflection(samples);
        return render_json(Json{{"freq_hz", hz(*freq)},
                                {"slope_per_deg", fit.fit.slope_per_deg},
                                {"intercept", fit.fit.intercept},
                                {"rmse", fit.rmse},
                                {"samples_used", fit.samples_used}});
    });

    // scatter-pattern / backscatter
    ScatterOptions scatter;
    auto *pattern = app.add_subcommand("scatter-pattern", "Dual-lobe scattering plus specular pattern on the arc");
    add_scatter_options(pattern, scatter, true);
    handlers.emplace_back(pattern, [&] {
        const auto p = run_prediction(scatter);
        if (common.format == "csv")
            return pattern_csv(p);
        return render_json(Json{{"peak_angle", p.peak_angle_deg},
                                {"specular_angle", p.specular_angle_deg},
                                {"peak_power_db", p.peak_power_db},
                                {"backscatter_margin_db", backscatter_margin_db(p.points, scatter.incident_angle_deg)},
                                {"smooth", classify_smooth(p.points, scatter.incident_angle_deg)}});
    });

    ScatterOptions back_opts;
    auto *back = app.add_subcommand("backscatter", "Backscatter margin and smoothness of a pattern");
    back->add_option("--input", input, "Pattern CSV (default: predict from the model options)");
    add_scatter_options(back, back_opts, true);
    handlers.emplace_back(back, [&] {
        json_only("backscatter");
        const auto points = input.empty() ? run_prediction(back_opts).points : load_pattern_csv(input);
        return render_json(Json{{"backscatter_margin_db", backscatter_margin_db(points, back_opts.incident_angle_deg)},
                                {"smooth", classify_smooth(points, back_opts.incident_angle_deg)}});
    });

    // partition
    LinkPowerMeasurement link;
    std::vector<double> gains;
    std::string tx_pol = "V", rx_pol = "V";
    auto *part = app.add_subcommand("partition", "Partition loss from a through-material link measurement");
    part->add_option("--pt-dbm", link.tx_power_dbm, "Transmit power (dBm)")->required();
    part->add_option("--pr-dbm", link.rx_power_dbm, "Received power (dBm)")->required();
    part->add_option("--distance", link.distance_m, "TX-RX separation (m)")->required();
    part->add_option("--freq", link.frequency_hz, "Carrier frequency (Hz)")->required();
    part->add_option("--gains-dbi", gains, "TX and RX antenna gains to remove (dBi)")->expected(2);
    part->add_option("--tx-pol", tx_pol)->check(CLI::IsMember({"V", "H"}));
    part->add_option("--rx-pol", rx_pol)->check(CLI::IsMember({"V", "H"}));
    handlers.emplace_back(part, [&] {
        json_only("partition");
        link.tx_pol = *parse_polarization(tx_pol);
        link.rx_pol = *parse_polarization(rx_pol);
        const auto meas = gains.empty() ? link : remove_antenna_gains(link, gains[0], gains[1]);
        const auto loss = partition_loss(meas);
        if (loss.negative)
            err << "warning: negative partition loss; received power exceeds free space\n";
        return render_json(Json{{"loss_db", loss.loss_db}, {"negative", loss.negative}});
    });

    // xpd
    std::vector<double> pl_co, pl_cross;
    auto *xpd = app.add_subcommand("xpd", "Antenna XPD from co- and cross-polarized path losses");
    xpd->add_option("--pl-co", pl_co, "Co-polarized path loss per distance (dB)")->required();
    xpd->add_option("--pl-cross", pl_cross, "Cross-polarized path loss per distance (dB)")->required();
    handlers.emplace_back(xpd, [&] {
        json_only("xpd");
        const auto s = summarize_xpd(pl_co, pl_cross);
        return render_json(Json{{"xpd_db", s.mean_db},
                                {"per_distance_db", s.per_distance_db},
                                {"spread_db", s.spread_db},
                                {"consistent", s.consistent}});
    });

    // depol-margin
    std::string material;
    std::optional<double> cross_mean, vh, hv, xpd_db;
    auto *depol = app.add_subcommand("depol-margin", "Cross-polarized partition loss minus antenna XPD");
    depol->add_option("--material", material, "Embedded material table")
        ->check(CLI::IsMember({std::string(drywall), std::string(clear_glass)}));
    depol->add_option("--freq", freq, "Carrier frequency (Hz), with --material");
    depol->add_option("--cross-mean", cross_mean, "Mean cross-polarized partition loss (dB)");
    depol->add_option("--vh", vh, "V-H partition loss (dB)");
    depol->add_option("--hv", hv, "H-V partition loss (dB)");
    depol->add_option("--xpd", xpd_db, "Antenna XPD (dB)");
    handlers.emplace_back(depol, [&] {
        json_only("depol-margin");
        double mean = 0.0, x = 0.0;
        if (!material.empty())
        {
            if (!freq)
                throw Error(Errc::invalid_argument, "--material needs --freq");
            const auto &d = paper_dataset();
            mean = cross_pol_mean_db(d.partition_record(material, *freq, Polarization::V, Polarization::H).mean_loss_db,
                                     d.partition_record(material, *freq, Polarization::H, Polarization::V).mean_loss_db);
            x = xpd_db.value_or(d.xpd_db(*freq));
        }
        else
        {
            if (!xpd_db)
                throw Error(Errc::invalid_argument, "pass --xpd with --cross-mean or --vh/--hv");
            if (cross_mean)
                mean = *cross_mean;
            else if (vh && hv)
                mean = cross_pol_mean_db(*vh, *hv);
            else
                throw Error(Errc::invalid_argument, "pass --cross-mean, --vh and --hv, or --material");
            x = *xpd_db;
        }
        return render_json(Json{{"margin_db", depolarization_margin(mean, x)},
                                {"cross_pol_mean_db", mean},
                                {"xpd_db", x}});
    });

    // budget
    double refl_db = 0.0, part_db = 0.0;
    auto *budget = app.add_subcommand("budget", "Reflected / transmitted / absorbed power split");
    budget->add_option("--refl-db", refl_db, "Reflection loss (dB)")->required();
    budget->add_option("--part-db", part_db, "Partition loss (dB); 'inf' for opaque")->required();
    handlers.emplace_back(budget, [&] {
        json_only("budget");
        const auto b = power_budget(refl_db, part_db);
        return render_json(Json{{"budget",
                                 {{"reflected", b.reflected_fraction},
                                  {"transmitted", b.transmitted_fraction},
                                  {"absorbed", b.absorbed_fraction}}}});
    });

    // fspl / ci-eval
    double freq_hz = 0.0, distance_m = 0.0, ple = 0.0;
    auto *fspl = app.add_subcommand("fspl", "Friis free-space path loss");
    fspl->add_option("--freq", freq_hz, "Carrier frequency (Hz)")->required();
    fspl->add_option("--distance", distance_m, "Distance (m)")->required();
    handlers.emplace_back(fspl, [&] {
        json_only("fspl");
        return render_json(
            Json{{"freq_hz", hz(freq_hz)}, {"distance_m", distance_m}, {"fspl_db", fspl_db(freq_hz, distance_m)}});
    });

    auto *ci_eval = app.add_subcommand("ci-eval", "Close-in (1 m) path loss model evaluation");
    ci_eval->add_option("--freq", freq_hz, "Carrier frequency (Hz)")->required();
    ci_eval->add_option("--ple", ple, "Path-loss exponent")->required();
    ci_eval->add_option("--distance", distance_m, "Distance (m), >= 1")->required();
    handlers.emplace_back(ci_eval, [&] {
        json_only("ci-eval");
        const CiModel model{freq_hz, ple, 0.0, 0};
        return render_json(Json{{"freq_hz", hz(freq_hz)},
                                {"ple", ple},
                                {"distance_m", distance_m},
                                {"path_loss_db", ci_path_loss_db(model, distance_m)}});
    });

    // fit-ci
    std::string env = "all";
    auto *fit = app.add_subcommand("fit-ci", "Fit CI models to directional path-loss records");
    fit->add_option("--input", input, "Path-loss CSV")->required();
    fit->add_option("--freq", freq, "Carrier frequency (Hz)");
    fit->add_option("--env", env, "LOS, NLOS, NLOS_BEST or all")
        ->check(CLI::IsMember({"LOS", "NLOS", "NLOS_BEST", "all"}))
        ->capture_default_str();
    handlers.emplace_back(fit, [&] {
        json_only("fit-ci");
        auto [f, samples] = select_frequency(load_path_loss_csv(input), freq);
        const auto reduction = reduce_directional(samples);
        if (env != "all")
        {
            const auto e = *parse_ci_environment(env);
            return render_json(ci_json(fit_ci(select_environment(reduction, e), f), e));
        }
        Json models = Json::array();
        for (const auto e : {CiEnvironment::LOS, CiEnvironment::NLOS_BEST, CiEnvironment::NLOS})
        {
            const auto subset = select_environment(reduction, e);
            if (!subset.empty())
                models.push_back(ci_json(fit_ci(subset, f), e));
        }
        if (models.empty())
            throw Error(Errc::too_few_samples, "no samples at the requested frequency");
        return render_json(models);
    });

    // reduce-directional
    auto *reduce = app.add_subcommand("reduce-directional", "Split records into LOS / NLOS / NLOS-best sets");
    reduce->add_option("--input", input, "Path-loss CSV")->required();
    reduce->add_option("--freq", freq, "Carrier frequency (Hz)");
    handlers.emplace_back(reduce, [&] {
        auto samples = load_path_loss_csv(input);
        if (freq)
            samples = select_frequency(std::move(samples), freq).second;
        const auto r = reduce_directional(samples);
        if (common.format == "csv")
        {
            std::ostringstream os;
            write_path_loss_csv(os, r.nlos_best);
            return os.str();
        }
        Json best = Json::array();
        for (const auto &s : r.nlos_best)
            best.push_back(sample_json(s));
        return render_json(Json{
            {"counts", {{"los", r.los.size()}, {"nlos_all", r.nlos_all.size()}, {"nlos_best", r.nlos_best.size()}}},
            {"nlos_best", best}});
    });

    // paper-tables
    auto *tables = app.add_subcommand("paper-tables", "Dump the embedded reference tables");
    handlers.emplace_back(tables, [&] {
        json_only("paper-tables");
        return render_json(paper_tables_json());
    });

    // validate
    auto *validate = app.add_subcommand("validate", "Summarize a path-loss CSV");
    validate->add_option("--input", input, "Path-loss CSV")->required();
    handlers.emplace_back(validate, [&] {
        json_only("validate");
        const auto samples = load_path_loss_csv(input);
        const auto report = validate_dataset(samples);
        Json dups = Json::array();
        for (const auto &k : report.duplicates)
            dups.push_back({{"freq_hz", hz(k.frequency_hz)},
                            {"tx_id", k.tx_id},
                            {"rx_id", k.rx_id},
                            {"tx_az_deg", k.tx_az_deg},
                            {"tx_el_deg", k.tx_el_deg},
                            {"rx_az_deg", k.rx_az_deg},
                            {"rx_el_deg", k.rx_el_deg},
                            {"tx_pol", to_string(k.tx_pol)},
                            {"rx_pol", to_string(k.rx_pol)},
                            {"occurrences", k.occurrences}});
        Json range = nullptr;
        if (report.min_distance_m)
            range = Json::array({*report.min_distance_m, *report.max_distance_m});
        return render_json(Json{{"count", {{"LOS", report.los_count}, {"NLOS", report.nlos_count}}},
                                {"distance_range_m", range},
                                {"duplicates", dups}});
    });

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &e)
    {
        app.exit(e, out, err);
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &e)
    {
        app.exit(e, out, err);
        return exit_ok;
    }
    catch (const CLI::ParseError &e)
    {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    std::string payload;
    try
    {
        for (const auto &[sub, run] : handlers)
            if (sub->parsed())
                payload = run();
    }
    catch (const Error &e)
    {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return exit_data;
    }
    catch (const std::exception &e)
    {
        err << "error: InternalError: " << e.what() << '\n';
        return exit_data;
    }

    if (common.output.empty())
    {
        out << payload;
        return exit_ok;
    }
    std::ofstream file(common.output, std::ios::binary);
    if (!(file << payload))
    {
        err << "error: FileNotFound: cannot write '" << common.output << "'\n";
        return exit_data;
    }
    return exit_ok;
}

} // namespace thzprop::cli
