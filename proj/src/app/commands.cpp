// SPDX-License-Identifier: Apache-2.0
//
// nomaisac - performance analysis toolkit for two-user NOMA sensing/communication systems
// Copyright (C) 2026 The nomaisac authors
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

#include "nomaisac/app/commands.hpp"

#include "nomaisac/analytic.hpp"
#include "nomaisac/app/acceptance.hpp"
#include "nomaisac/app/config_file.hpp"
#include "nomaisac/montecarlo.hpp"
#include "nomaisac/region.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace nisac::app
{

namespace
{

constexpr const char *tool_version = "0.1.0";

nlohmann::json sweep_json(const std::string &command, const SystemConfig &cfg, const SweepSpec &spec)
{
    const Mode mode = spec.mode();
    return {{"command", command},
            {"version", tool_version},
            {"config", config_json(cfg)},
            {"mode", mode.name()},
            {"kappa", mode.kappa()},
            {"mu", mode.mu()},
            {"snr_db_min", spec.snr_db_min},
            {"snr_db_max", spec.snr_db_max},
            {"snr_db_step", spec.snr_db_step},
            {"trials", spec.trials},
            {"seed", spec.seed}};
}

McOptions mc_options(const SweepSpec &spec)
{
    return {spec.trials, spec.seed, spec.workers};
}

} // namespace

void validate_sweep(const SweepSpec &spec)
{
    if (!std::isfinite(spec.snr_db_min) || !std::isfinite(spec.snr_db_max))
        throw std::invalid_argument("SNR bounds must be finite");
    if (!(spec.snr_db_min <= spec.snr_db_max))
        throw std::invalid_argument("snr-db-min must not exceed snr-db-max");
    if (!(spec.snr_db_step > 0.0))
        throw std::invalid_argument("snr-db-step must be positive");
}

std::vector<double> snr_grid(const SweepSpec &spec)
{
    validate_sweep(spec);
    const auto count =
        static_cast<std::size_t>(std::floor((spec.snr_db_max - spec.snr_db_min) / spec.snr_db_step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = spec.snr_db_min + static_cast<double>(i) * spec.snr_db_step;
    return grid;
}

nlohmann::json config_json(const SystemConfig &cfg)
{
    return {{"rho1", cfg.rho1},
            {"rho2", cfg.rho2},
            {"alpha_n", cfg.alpha_n},
            {"alpha_f", cfg.alpha_f},
            {"sigma2_c", cfg.sigma2_c},
            {"sigma2_s", cfg.sigma2_s},
            {"num_rx_antennas", cfg.num_rx_antennas},
            {"frame_length", cfg.frame_length},
            {"target_rate_n", cfg.target_rate_n},
            {"target_rate_f", cfg.target_rate_f},
            {"sensing_eigenvalues", cfg.sensing_eigenvalues}};
}

CommandOutput outage_command(const SystemConfig &cfg, const SweepSpec &spec)
{
    validate_config(cfg);
    const Mode mode = spec.mode();
    CommandOutput out;
    out.metadata = sweep_json("outage", cfg, spec);
    out.table.columns = {"snr_db", "pout_n_analytic", "pout_f_analytic", "pout_n_asym", "pout_f_asym"};
    if (spec.trials > 0)
        out.table.columns.insert(out.table.columns.end(),
                                 {"pout_n_mc", "pout_f_mc", "mc_stderr_n", "mc_stderr_f"});

    const bool feasible = !mode.comm_degenerate() && thresholds(cfg, mode).feasible;
    if (mode.comm_degenerate())
        out.warnings.push_back("communications have no bandwidth or power; outage is identically 1");
    else if (!feasible)
        out.warnings.push_back("infeasible power allocation (alpha_f <= gamma_bar_f * alpha_n); outage is identically 1");

    for (double db : snr_grid(spec))
    {
        const double p = db_to_linear(db);
        const OutagePair exact = outage_probability(cfg, mode, p);
        const OutagePair asym = feasible ? outage_asymptotic(cfg, mode, p) : OutagePair{1.0, 1.0};
        std::vector<Cell> row = {db, exact.near, exact.far, asym.near, asym.far};
        if (spec.trials > 0)
        {
            const UserEstimates mc = estimate_outage(cfg, mode, p, mc_options(spec));
            row.insert(row.end(), {mc.near.value, mc.far.value, mc.near.std_error, mc.far.std_error});
        }
        out.table.add_row(std::move(row));
    }
    return out;
}

CommandOutput ecr_command(const SystemConfig &cfg, const SweepSpec &spec)
{
    validate_config(cfg);
    const Mode mode = spec.mode();
    CommandOutput out;
    out.metadata = sweep_json("ecr", cfg, spec);
    out.table.columns = {"snr_db",     "ecr_n_analytic", "ecr_f_analytic", "ecr_sum_analytic",
                         "ecr_n_asym", "ecr_f_asym",     "ecr_sum_asym"};
    if (spec.trials > 0)
        out.table.columns.insert(out.table.columns.end(),
                                 {"ecr_n_mc", "ecr_f_mc", "ecr_sum_mc", "mc_stderr_n", "mc_stderr_f"});
    if (mode.comm_degenerate())
        out.warnings.push_back("communications have no bandwidth or power; rates are identically 0");

    for (double db : snr_grid(spec))
    {
        const double p = db_to_linear(db);
        const RatePair exact = ergodic_rates(cfg, mode, p);
        const RatePair asym = ergodic_rates_asymptotic(cfg, mode, p);
        std::vector<Cell> row = {db, exact.near, exact.far, exact.sum(), asym.near, asym.far, asym.sum()};
        if (spec.trials > 0)
        {
            const UserEstimates mc = estimate_ecr(cfg, mode, p, mc_options(spec));
            row.insert(row.end(), {mc.near.value, mc.far.value, mc.near.value + mc.far.value, mc.near.std_error,
                                   mc.far.std_error});
        }
        out.table.add_row(std::move(row));
    }
    return out;
}

CommandOutput sensing_command(const SystemConfig &cfg, const SweepSpec &spec)
{
    validate_config(cfg);
    const Mode isac = Mode::isac();
    const Mode fdsac = Mode::fdsac(spec.split);
    CommandOutput out;
    out.metadata = sweep_json("sensing", cfg, spec);
    out.metadata["mode"] = "isac+fdsac";
    out.metadata["kappa"] = spec.split.kappa();
    out.metadata["mu"] = spec.split.mu();
    out.table.columns = {"snr_db", "sr_isac", "sr_isac_asym", "sr_fdsac", "sr_fdsac_asym"};
    if (sensing_rank(cfg) == 0)
        out.warnings.push_back("all sensing eigenvalues are zero; sensing rates are identically 0");
    for (double db : snr_grid(spec))
    {
        const double p = db_to_linear(db);
        out.table.add_row({db, sensing_rate(cfg, isac, p), sensing_rate_asymptotic(cfg, isac, p),
                           sensing_rate(cfg, fdsac, p), sensing_rate_asymptotic(cfg, fdsac, p)});
    }
    return out;
}

CommandOutput region_command(const SystemConfig &cfg, double p_db, int grid_n)
{
    validate_config(cfg);
    if (!std::isfinite(p_db))
        throw std::invalid_argument("p-db must be finite");
    const double p = db_to_linear(p_db);
    const RegionFrontier frontier = fdsac_frontier(cfg, p, grid_n);
    const RatePoint corner = isac_corner(cfg, p);
    const ContainmentReport report = containment_check(frontier, corner);

    CommandOutput out;
    out.metadata = {{"command", "region"}, {"version", tool_version}, {"config", config_json(cfg)},
                    {"p_db", p_db},        {"grid_n", grid_n}};
    out.table.columns = {"kind", "kappa", "mu", "rate_s", "rate_c"};
    out.table.add_row({std::string("isac_corner"), Cell{}, Cell{}, corner.rate_s, corner.rate_c});
    for (const auto &pt : frontier.points)
        out.table.add_row({std::string("grid"), pt.kappa, pt.mu, pt.rates.rate_s, pt.rates.rate_c});
    for (const auto &pt : frontier.pareto)
        out.table.add_row({std::string("pareto"), pt.kappa, pt.mu, pt.rates.rate_s, pt.rates.rate_c});
    out.table.summary = {{"containment", std::string(report.holds ? "contained" : "not_contained")},
                         {"max_violation", report.max_violation},
                         {"tolerance", containment_tolerance}};
    if (!report.holds)
        out.warnings.push_back("FDSAC region is not contained in the ISAC rectangle");
    return out;
}

namespace
{

struct CommonFlags
{
    std::string config_path;
    std::string output_path;
    std::string format = "csv";
};

struct SweepFlags
{
    SweepSpec spec;
    std::string mode = "isac";
    double kappa = 0.5;
    double mu = 0.5;
};

void add_common(CLI::App *sub, CommonFlags &flags)
{
    sub->add_option("--config", flags.config_path, "key=value configuration file (defaults when omitted)");
    sub->add_option("--output", flags.output_path, "output file (stdout when omitted)");
    sub->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_sweep(CLI::App *sub, SweepFlags &flags)
{
    sub->add_option("--snr-db-min", flags.spec.snr_db_min, "first SNR point [dB]");
    sub->add_option("--snr-db-max", flags.spec.snr_db_max, "last SNR point [dB]");
    sub->add_option("--snr-db-step", flags.spec.snr_db_step, "SNR step [dB]");
    sub->add_option("--trials", flags.spec.trials, "Monte Carlo trials per point (0 = analytic only)");
    sub->add_option("--seed", flags.spec.seed, "Monte Carlo seed");
    sub->add_option("--mode", flags.mode, "isac or fdsac")->check(CLI::IsMember({"isac", "fdsac"}));
    sub->add_option("--kappa", flags.kappa, "FDSAC communication bandwidth fraction")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--mu", flags.mu, "FDSAC communication power fraction")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--workers", flags.spec.workers, "Monte Carlo worker threads (0 = all cores)");
}

SweepSpec finish_sweep(SweepFlags &flags)
{
    SweepSpec spec = flags.spec;
    spec.kind = flags.mode == "isac" ? Mode::Kind::isac : Mode::Kind::fdsac;
    spec.split = ResourceSplit(flags.kappa, flags.mu);
    validate_sweep(spec);
    return spec;
}

SystemConfig load_or_default(const CommonFlags &flags)
{
    if (flags.config_path.empty())
        return default_config();
    return load_config_file(flags.config_path).system;
}

OutputFormat parse_format(const std::string &s)
{
    return s == "json" ? OutputFormat::json : OutputFormat::csv;
}

// Writes to the requested file, or to out when no path was given.
void emit(const CommonFlags &flags, std::ostream &out, const std::string &text)
{
    if (flags.output_path.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(flags.output_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file '" + flags.output_path + "'");
    file << text;
    if (!file)
        throw std::runtime_error("failed writing output file '" + flags.output_path + "'");
}

std::string render(const CommandOutput &result, OutputFormat format)
{
    std::ostringstream buf;
    write_table(buf, result.table, format, result.metadata);
    return buf.str();
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App cli{"Performance analysis of two-user NOMA integrated sensing and communications"};
    cli.require_subcommand(1);

    CommonFlags common;
    SweepFlags sweep;
    double p_db = 5.0;
    int grid_n = 101;
    AcceptanceOptions selftest_opts;
    selftest_opts.trials = 100'000;

    auto *outage = cli.add_subcommand("outage", "outage probability versus SNR");
    auto *ecr = cli.add_subcommand("ecr", "ergodic communication rates versus SNR");
    auto *sensing = cli.add_subcommand("sensing", "sensing rate versus SNR (ISAC and FDSAC)");
    auto *region = cli.add_subcommand("region", "sensing-communication rate regions");
    auto *selftest = cli.add_subcommand("selftest", "run the acceptance checks at reduced trial counts");
    for (auto *sub : {outage, ecr, sensing, region, selftest})
        add_common(sub, common);
    for (auto *sub : {outage, ecr, sensing})
        add_sweep(sub, sweep);
    region->add_option("--p-db", p_db, "transmit SNR [dB]");
    region->add_option("--grid-n", grid_n, "grid points per (kappa, mu) axis")->check(CLI::PositiveNumber);
    selftest->add_option("--trials", selftest_opts.trials, "Monte Carlo trials per point");
    selftest->add_option("--seed", selftest_opts.seed, "Monte Carlo seed");
    selftest->add_option("--workers", selftest_opts.workers, "worker threads (0 = all cores)");

    try
    {
        cli.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = cli.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try
    {
        const OutputFormat format = parse_format(common.format);
        if (*selftest)
        {
            SystemConfig cfg;
            try
            {
                cfg = load_or_default(common);
            }
            catch (const ConfigError &e)
            {
                std::ostringstream report;
                report << "config  FAIL  configuration validation: " << e.what() << '\n';
                emit(common, out, report.str());
                err << "error: " << e.what() << '\n';
                return 1;
            }
            const auto results = run_acceptance(cfg, selftest_opts);
            emit(common, out, format_report(results));
            return all_passed(results) ? 0 : 2;
        }

        const SystemConfig cfg = load_or_default(common);
        CommandOutput result;
        if (*outage)
            result = outage_command(cfg, finish_sweep(sweep));
        else if (*ecr)
            result = ecr_command(cfg, finish_sweep(sweep));
        else if (*sensing)
            result = sensing_command(cfg, finish_sweep(sweep));
        else
            result = region_command(cfg, p_db, grid_n);
        for (const auto &w : result.warnings)
            err << "warning: " << w << '\n';
        emit(common, out, render(result, format));
        return 0;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace nisac::app
